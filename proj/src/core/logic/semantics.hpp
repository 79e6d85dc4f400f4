#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../dba.hpp"
#include "../kripke.hpp"
#include "axioms.hpp"
#include "formula.hpp"

namespace kcw::logic {

// A model is a finite algebra, a plain context (protoconcept semantics,
// no modal connectives) or a Kripke context (box = fR, bbox = fS).
struct Model {
  const Dba* alg = nullptr;
  const Context* ctx = nullptr;
  const KripkeContext* kc = nullptr;

  static Model algebra(const Dba& a) { return {&a, nullptr, nullptr}; }
  static Model context(const Context& c) { return {nullptr, &c, nullptr}; }
  static Model kripke(const KripkeContext& k) { return {nullptr, &k.ctx, &k}; }
};

int eval(const Dba& alg, const std::map<std::string, int>& valuation, const Formula& f);
Protoconcept eval(const Context& ctx, const KripkeContext* kc,
                  const std::map<std::string, Protoconcept>& valuation, const Formula& f);

struct TruthReport {
  bool valid = false;
  std::uint64_t valuations = 0;
  // Failing valuation, by variable, rendered as element descriptions.
  std::vector<std::pair<std::string, std::string>> witness;
};

// True iff every valuation of the occurring variables satisfies
// v(left) below v(right).
TruthReport sequent_truth(const Model& model, const Sequent& seq, const Budgets& budgets = {});

enum class RelationMode { All, ReflexiveTransitive };

struct SearchBounds {
  int max_g = 2;
  int max_m = 2;
  RelationMode mode = RelationMode::All;
};

struct SearchResult {
  bool found = false;
  std::uint64_t models_scanned = 0;
  // Witness model; relations only meaningful when the system is modal.
  std::vector<std::string> objects, attributes;
  std::vector<std::string> incidence_rows;
  std::vector<std::pair<int, int>> r_pairs, s_pairs;
  std::vector<std::pair<std::string, std::string>> valuation;  // var -> protoconcept
};

// Enumerates contexts (and relations, for modal systems) in deterministic
// order and returns the first falsifying model and valuation, or exhausted.
SearchResult countermodel_search(const Sequent& seq, const System& system,
                                 const SearchBounds& bounds, const Budgets& budgets = {});

std::string proto_to_string(const Context& ctx, const Protoconcept& x);

}  // namespace kcw::logic
