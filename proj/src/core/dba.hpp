#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bits.hpp"
#include "context.hpp"
#include "error.hpp"

namespace kcw {

struct KripkeContext;

using Elem = std::uint16_t;

// A finite double Boolean algebra given by explicit operation tables, with
// optional operator tables I and C (making it a dBao). Carrier elements are
// indices 0..n-1; binary tables are row-major.
struct Dba {
  int n = 0;
  std::vector<Elem> meet_t, join_t;  // n*n
  std::vector<Elem> neg_t, lneg_t;   // n
  Elem top = 0, bot = 0;
  std::vector<Elem> i_t, c_t;  // n each, both empty for a plain dBa

  bool has_operators() const { return !i_t.empty(); }

  Elem meet(int x, int y) const { return meet_t[static_cast<size_t>(x) * n + y]; }
  Elem join(int x, int y) const { return join_t[static_cast<size_t>(x) * n + y]; }
  Elem neg(int x) const { return neg_t[static_cast<size_t>(x)]; }
  Elem lneg(int x) const { return lneg_t[static_cast<size_t>(x)]; }
  Elem op_i(int x) const { return i_t[static_cast<size_t>(x)]; }
  Elem op_c(int x) const { return c_t[static_cast<size_t>(x)]; }
  Elem vee(int x, int y) const { return neg(meet(neg(x), neg(y))); }
  Elem wedge(int x, int y) const { return lneg(join(lneg(x), lneg(y))); }
  Elem meet_part_of(int x) const { return meet(x, x); }
  Elem join_part_of(int x) const { return join(x, x); }

  void validate_shape() const;  // table sizes and index ranges
};

// x below y in the quasi-order: x meet y = x meet x and x join y = y join y.
bool quasi_leq(const Dba& alg, int x, int y);

enum class Level { Dba, Contextual, Pure, Dbao, Topological };

Level parse_level(const std::string& name);
std::string level_name(Level level);

struct AxiomResult {
  std::string id;
  bool pass = true;
  std::vector<int> witness;  // smallest violating tuple, enumeration order
};

struct AxiomReport {
  Level level = Level::Dba;
  bool pass = false;
  std::vector<AxiomResult> axioms;
  const AxiomResult* find(const std::string& id) const;
};

// Exhaustive check of every axiom required by the level (prerequisites
// included: contextual/pure/dbao imply dba, topological implies dbao).
AxiomReport check_axioms(const Dba& alg, Level level);

Elem dual_i(const Dba& alg, int x);  // neg I(neg x)
Elem dual_c(const Dba& alg, int x);  // lneg C(lneg x)

struct StructureParts {
  std::vector<int> d_meet, d_join, d_pure;  // ascending carrier indices
  bool pure_closed = false;                 // pure part closed under all operations
  bool meet_extract_boolean = false;        // (D_meet, meet, vee, neg, bot, neg bot)
  bool join_extract_boolean = false;        // (D_join, join, wedge, lneg, top, lneg top)
  bool meet_extract_bao = false;            // with I^delta restricted (dBao input)
  bool join_extract_bao = false;            // with C restricted
};

StructureParts structure_parts(const Dba& alg);

struct FiltersReport {
  // Filters/ideals as carrier masks; the full scan requires n within the
  // filter budget.
  std::vector<Mask> filters, ideals;
  std::vector<Mask> primary_filters, primary_ideals;
  bool fp_equals_fpr = false;  // primary == prime-trace classification
};

FiltersReport filters_ideals(const Dba& alg, const Budgets& budgets = {});

bool is_filter(const Dba& alg, Mask f);
bool is_ideal(const Dba& alg, Mask f);
bool is_primary_filter(const Dba& alg, Mask f);
bool is_primary_ideal(const Dba& alg, Mask f);

// Smallest filter containing F and x, computed by closure; tests compare it
// with the explicit description {a : x meet w below a for some w in F}.
Mask generated_filter(const Dba& alg, Mask f, int x);
Mask generated_filter_formula(const Dba& alg, Mask f, int x);
Mask generated_ideal(const Dba& alg, Mask f, int x);
Mask generated_ideal_formula(const Dba& alg, Mask f, int x);

// Primary filters/ideals without a subset scan: they correspond one-to-one
// to prime filters of the Boolean meet part (dually, join part), lifted by
// base. Works for any carrier size.
std::vector<Mask> primary_filters(const Dba& alg);
std::vector<Mask> primary_ideals(const Dba& alg);

struct StandardContext {
  Context ctx;               // objects F0.., attributes I0.., incidence = disjointness
  std::vector<Mask> fp, ip;  // fp[i] = carrier members of primary filter i
  bool derivation_lemma_ok = false;  // F_x' = I_{x meet-join} and the dual, all x
};

StandardContext standard_context(const Dba& alg);

// For a carrier element x: the rows/columns of the standard context whose
// filter/ideal contains x.
Mask filters_containing(const StandardContext& sc, int x);
Mask ideals_containing(const StandardContext& sc, int x);

struct CanonicalKc {
  StandardContext sc;
  std::unique_ptr<KripkeContext> kc;
  bool alternate_characterisation_ok = false;  // the "I a in u implies a in u1" form
  bool approximation_identities_ok = false;    // upper F_a = F_{I^delta a} and friends
  bool reflexive_transitive = false;           // of the produced relations

  CanonicalKc();
  CanonicalKc(CanonicalKc&&) noexcept;
  CanonicalKc& operator=(CanonicalKc&&) noexcept;
  ~CanonicalKc();
};

CanonicalKc canonical_kripke_context(const Dba& dbao);

struct RepresentationReport {
  CanonicalKc canonical;
  std::vector<Protoconcept> h;  // h[x] = (F_x, I_x) in the canonical complex algebra
  bool preserves_meet = false, preserves_join = false;
  bool preserves_neg = false, preserves_lneg = false;
  bool preserves_top = false, preserves_bot = false;
  bool preserves_i = false, preserves_c = false;
  bool quasi_injective = false;  // h(x)=h(y) forces equal idempotent parts
  bool contextual_input = false;
  bool injective = false;
  bool pure_into_semiconcepts = false;
  bool pure_injective = false;
  bool topological_input = false;
  bool canonical_reflexive_transitive = false;
  bool embedding_ok() const {
    return preserves_meet && preserves_join && preserves_neg && preserves_lneg &&
           preserves_top && preserves_bot && preserves_i && preserves_c && quasi_injective &&
           (!contextual_input || injective) && pure_into_semiconcepts && pure_injective &&
           (!topological_input || canonical_reflexive_transitive);
  }
};

RepresentationReport representation(const Dba& dbao, const Budgets& budgets = {});

// A Boolean algebra with one operator, used by the bridge constructions.
struct Bao {
  int n = 0;
  std::vector<Elem> join_t, meet_t;  // n*n
  std::vector<Elem> neg_t;           // n
  Elem bot = 0, top = 0;
  std::vector<Elem> f_t;  // n

  Elem join(int x, int y) const { return join_t[static_cast<size_t>(x) * n + y]; }
  Elem meet(int x, int y) const { return meet_t[static_cast<size_t>(x) * n + y]; }
  Elem neg(int x) const { return neg_t[static_cast<size_t>(x)]; }
  Elem f(int x) const { return f_t[static_cast<size_t>(x)]; }
};

// Rejects inputs that fail the Boolean laws or normality/additivity of f.
void validate_bao(const Bao& bao);

// Bao -> dBao: lneg = neg, C = f, I = dual of f.
Dba dbao_from_bao(const Bao& bao);

// dBa plus Baos on its two Boolean parts -> dBao with I(x) = neg Ibar(neg x)
// and C(x) = Cbar(x join x). The part operators are given as full-length
// tables; only entries at D_meet (resp. D_join) positions are read.
Dba dbao_from_parts(const Dba& dba, const std::vector<Elem>& ibar, const std::vector<Elem>& cbar);

// Powerset Bao of a frame: f = m_R (may-reach).
Bao powerset_bao(int n, const std::vector<Mask>& rel);

// Stock algebra: the powerset dBa on `atoms` generators, optionally with
// identity operator tables.
Dba boolean_dba(int atoms, bool identity_operators);

}  // namespace kcw
