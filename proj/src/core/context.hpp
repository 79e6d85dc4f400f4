#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace kcw {

struct Budgets {
  std::uint64_t enumeration = std::uint64_t{1} << 24;  // bound on 2^|G| * 2^|M|
  int filter_scan_max = 16;                            // full subset scan up to this carrier size
  int algebra_max = 4096;                              // densest operation table materialized
  std::uint64_t truth = std::uint64_t{1} << 24;        // bound on |carrier|^#vars in truth checks
};

// A formal context (G, M, I). Object/attribute sets are kept as index masks
// into the declared name order; at most 64 names per side.
class Context {
 public:
  Context() : Context({}, {}, {}) {}  // the empty 0x0 context
  Context(std::vector<std::string> objects, std::vector<std::string> attributes,
          std::vector<Mask> object_rows);

  static Context from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                           const std::vector<std::string>& rows);  // rows of 'X'/'.'

  int size_g() const { return static_cast<int>(objects_.size()); }
  int size_m() const { return static_cast<int>(attributes_.size()); }
  Mask all_objects() const { return full_mask(size_g()); }
  Mask all_attributes() const { return full_mask(size_m()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::vector<Mask>& object_rows() const { return rows_; }
  const std::vector<Mask>& attribute_columns() const { return cols_; }
  bool incidence(int g, int m) const { return has_bit(rows_[static_cast<size_t>(g)], m); }
  std::uint32_t id() const { return id_; }

  // A' for A a set of objects: the attributes shared by every object of A.
  Mask derive_objects(Mask a) const;
  // B' for B a set of attributes: the objects having every attribute of B.
  Mask derive_attributes(Mask b) const;
  Mask closure_objects(Mask a) const { return derive_attributes(derive_objects(a)); }
  Mask closure_attributes(Mask b) const { return derive_objects(derive_attributes(b)); }

  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> attribute_index(const std::string& name) const;
  std::vector<std::string> object_names(Mask a) const;
  std::vector<std::string> attribute_names(Mask b) const;

 private:
  std::vector<std::string> objects_, attributes_;
  std::vector<Mask> rows_;  // rows_[g] = attributes of g
  std::vector<Mask> cols_;  // cols_[m] = objects of m
  std::uint32_t id_;
};

enum class Side { objects, attributes };

Mask derive(const Context& ctx, Side side, Mask x);

// A pair (extent, intent) with extent'' = intent'; the carrier element of the
// protoconcept algebra. Tied to the context it was built from.
struct Protoconcept {
  std::uint32_t ctx_id = 0;
  Mask extent = 0;
  Mask intent = 0;

  friend bool operator==(const Protoconcept&, const Protoconcept&) = default;
  friend auto operator<=>(const Protoconcept& a, const Protoconcept& b) {
    if (auto c = a.extent <=> b.extent; c != 0) return c;
    return a.intent <=> b.intent;
  }
};

enum class ConceptKind { None, ProtoconceptOnly, SemiconceptOnly, Concept };
enum class KindFilter { Protoconcepts, Semiconcepts, Concepts };

ConceptKind classify(const Context& ctx, Mask a, Mask b);

// Validating constructor; rejects pairs failing the protoconcept condition.
Protoconcept make_protoconcept(const Context& ctx, Mask a, Mask b);

// All pairs passing the filter, deduplicated, ordered by (extent, intent)
// ascending with bit i = element i of the declared order.
std::vector<Protoconcept> enumerate(const Context& ctx, KindFilter filter,
                                    const Budgets& budgets = {});

Protoconcept proto_top(const Context& ctx);
Protoconcept proto_bot(const Context& ctx);
Protoconcept proto_meet(const Context& ctx, const Protoconcept& x, const Protoconcept& y);
Protoconcept proto_join(const Context& ctx, const Protoconcept& x, const Protoconcept& y);
Protoconcept proto_neg(const Context& ctx, const Protoconcept& x);
Protoconcept proto_lneg(const Context& ctx, const Protoconcept& x);
Protoconcept proto_vee(const Context& ctx, const Protoconcept& x, const Protoconcept& y);
Protoconcept proto_wedge(const Context& ctx, const Protoconcept& x, const Protoconcept& y);

bool proto_leq(const Context& ctx, const Protoconcept& x, const Protoconcept& y);

bool is_protoconcept(const Context& ctx, Mask a, Mask b);
bool is_semiconcept(const Context& ctx, Mask a, Mask b);
bool is_concept(const Context& ctx, Mask a, Mask b);

// The two Boolean algebras sitting inside the protoconcept algebra, together
// with the verdicts of the witness-map verification: A |-> (A, A') from P(G)
// onto the meet part, B |-> (B', B) from P(M) anti-onto the join part.
struct BooleanParts {
  std::vector<Protoconcept> meet_part;  // {x : x meet x = x}, enumeration order
  std::vector<Protoconcept> join_part;
  bool iso_ok = false;      // powerset of G -> meet part
  bool anti_iso_ok = false;  // powerset of M -> join part
};

BooleanParts boolean_parts(const Context& ctx, const Budgets& budgets = {});

}  // namespace kcw
