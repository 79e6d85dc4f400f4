#pragma once

#include <vector>

#include "context.hpp"

namespace kcw {

struct KripkeContext;

// Generalised approximation space: a carrier with an arbitrary binary
// relation, row x holding E(x). No reflexive closure is ever applied.
struct ApproxSpace {
  int n = 0;
  std::vector<Mask> rel;

  static ApproxSpace make(int n, std::vector<Mask> rows);
  Mask neighbourhood(int x) const { return rel[static_cast<size_t>(x)]; }
};

enum class ApproxMode { lower, upper };

Mask approx_lower(const ApproxSpace& space, Mask a);
Mask approx_upper(const ApproxSpace& space, Mask a);
Mask approx(const ApproxSpace& space, ApproxMode mode, Mask a);

struct RelationReport {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool equivalence() const { return reflexive && symmetric && transitive; }
  bool preorder() const { return reflexive && transitive; }
};

RelationReport relation_report(const ApproxSpace& space);

// Equivalence classes (meaningful when the relation is an equivalence),
// ordered by least member.
std::vector<Mask> relation_classes(const ApproxSpace& space);

enum class InducedKind { E1, E2, J1, J2 };

// E1: equal rows of I; E2: equal columns; J1/J2 the inclusion variants.
std::pair<ApproxSpace, RelationReport> induced_relation(const Context& ctx, InducedKind kind);

// One concept approximation: either the exact pair of a feasible set, or the
// lower/upper concept-approximation pair.
struct ConceptApprox {
  bool exact = false;
  Protoconcept lower;
  Protoconcept upper;  // == lower when exact
};

ConceptApprox concept_approx(const KripkeContext& kc_ds, Side side, Mask x);

struct PairApprox {
  bool is_concept = false;  // (A,B) already a concept: returned unchanged
  Protoconcept lower;
  Protoconcept upper;
};

PairApprox pair_approx(const KripkeContext& kc_ds, Mask a, Mask b);

bool is_feasible(const Context& ctx, Side side, Mask x);

}  // namespace kcw
