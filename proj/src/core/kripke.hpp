#pragma once

#include <vector>

#include "context.hpp"
#include "dba.hpp"
#include "rough.hpp"

namespace kcw {

// A context together with relations R on objects and S on attributes.
struct KripkeContext {
  Context ctx;
  std::vector<Mask> r_rows;  // r_rows[g] = R(g) as object mask
  std::vector<Mask> s_rows;  // s_rows[m] = S(m) as attribute mask

  KripkeContext(Context c, std::vector<Mask> r, std::vector<Mask> s);

  ApproxSpace object_space() const { return ApproxSpace::make(ctx.size_g(), r_rows); }
  ApproxSpace attribute_space() const { return ApproxSpace::make(ctx.size_m(), s_rows); }
};

KripkeContext make_kc_identity(Context ctx);
// The Kripke context induced by the indiscernibility relations E1, E2.
KripkeContext make_kc_ds(Context ctx);

enum class ModalKind { fR, fS, fR_dual, fS_dual };

Protoconcept f_r(const KripkeContext& kc, const Protoconcept& x);
Protoconcept f_s(const KripkeContext& kc, const Protoconcept& x);
Protoconcept f_r_dual(const KripkeContext& kc, const Protoconcept& x);
Protoconcept f_s_dual(const KripkeContext& kc, const Protoconcept& x);
Protoconcept modal_op(const KripkeContext& kc, ModalKind which, const Protoconcept& x);

struct KcReport {
  bool reflexive_left = false, reflexive_right = false;
  bool symmetric_left = false, symmetric_right = false;
  bool transitive_left = false, transitive_right = false;
  bool bisimulation = false;  // back and forth conditions of I between (G,R) and (M,S)
  bool reflexive() const { return reflexive_left && reflexive_right; }
  bool symmetric() const { return symmetric_left && symmetric_right; }
  bool transitive() const { return transitive_left && transitive_right; }
};

KcReport kc_report(const KripkeContext& kc);

enum class CarrierKind { Full, Semiconcept };

// The complex algebra as explicit operation tables over the enumeration
// order, I = fR and C = fS restricted to the carrier.
struct ComplexAlgebra {
  std::vector<Protoconcept> carrier;
  Dba alg;  // carries operator tables
  // For the full algebra: the semiconcept algebra was verified to be the
  // pure part (indices of pure elements match the semiconcept enumeration).
  bool semiconcepts_are_pure_part = false;
};

ComplexAlgebra complex_algebra(const KripkeContext& kc, CarrierKind which,
                               const Budgets& budgets = {});

// KC0 := ((W,R),(W,R),!=) together with the verdicts of Thm-style checks:
// A' = complement, the two negations agree, f1 is the dual of f2, and
// A |-> (A, complement) is an isomorphism onto the frame complex algebra.
struct FrameBridge {
  KripkeContext kc;
  bool prime_is_complement = false;
  bool negations_agree = false;     // neg x = lneg x and neg neg x = x
  bool f1_dual_of_f2 = false;
  bool iso_onto_frame_algebra = false;
  bool ok() const {
    return prime_is_complement && negations_agree && f1_dual_of_f2 && iso_onto_frame_algebra;
  }
};

FrameBridge frame_bridge(int n, const std::vector<Mask>& rel, const Budgets& budgets = {});

// The four modal-term expressions for concept approximations, computed
// through the modal operators and the protoconcept operations only.
struct TermApprox {
  Protoconcept lower_a, upper_a;  // of extent(x)
  Protoconcept lower_b, upper_b;  // of intent(y)
  bool agrees = false;            // bitwise agreement with concept_approx
};

TermApprox approx_via_terms(const KripkeContext& kc_ds, const Protoconcept& x,
                            const Protoconcept& y);

}  // namespace kcw
