#include "kripke.hpp"

#include <algorithm>

namespace kcw {

KripkeContext::KripkeContext(Context c, std::vector<Mask> r, std::vector<Mask> s)
    : ctx(std::move(c)), r_rows(std::move(r)), s_rows(std::move(s)) {
  if (static_cast<int>(r_rows.size()) != ctx.size_g())
    fail(ErrorCode::dimension_mismatch, "R row count does not match object count");
  if (static_cast<int>(s_rows.size()) != ctx.size_m())
    fail(ErrorCode::dimension_mismatch, "S row count does not match attribute count");
  for (Mask row : r_rows)
    if (!subset(row, ctx.all_objects())) fail(ErrorCode::dimension_mismatch, "R row out of range");
  for (Mask row : s_rows)
    if (!subset(row, ctx.all_attributes()))
      fail(ErrorCode::dimension_mismatch, "S row out of range");
}

KripkeContext make_kc_identity(Context ctx) {
  std::vector<Mask> r, s;
  for (int g = 0; g < ctx.size_g(); ++g) r.push_back(Mask{1} << g);
  for (int m = 0; m < ctx.size_m(); ++m) s.push_back(Mask{1} << m);
  return KripkeContext(std::move(ctx), std::move(r), std::move(s));
}

KripkeContext make_kc_ds(Context ctx) {
  auto [e1, rep1] = induced_relation(ctx, InducedKind::E1);
  auto [e2, rep2] = induced_relation(ctx, InducedKind::E2);
  (void)rep1;
  (void)rep2;
  return KripkeContext(std::move(ctx), std::move(e1.rel), std::move(e2.rel));
}

namespace {
void require_member(const KripkeContext& kc, const Protoconcept& x) {
  if (x.ctx_id != kc.ctx.id())
    fail(ErrorCode::context_mismatch, "protoconcept belongs to a different context");
}

Mask lower(const std::vector<Mask>& rel, Mask a) {
  Mask out = 0;
  for (size_t i = 0; i < rel.size(); ++i)
    if (subset(rel[i], a)) out = with_bit(out, static_cast<int>(i));
  return out;
}

Mask upper(const std::vector<Mask>& rel, Mask a) {
  Mask out = 0;
  for (size_t i = 0; i < rel.size(); ++i)
    if (rel[i] & a) out = with_bit(out, static_cast<int>(i));
  return out;
}
}  // namespace

Protoconcept f_r(const KripkeContext& kc, const Protoconcept& x) {
  require_member(kc, x);
  Mask a = lower(kc.r_rows, x.extent);
  return {kc.ctx.id(), a, kc.ctx.derive_objects(a)};
}

Protoconcept f_s(const KripkeContext& kc, const Protoconcept& x) {
  require_member(kc, x);
  Mask b = lower(kc.s_rows, x.intent);
  return {kc.ctx.id(), kc.ctx.derive_attributes(b), b};
}

Protoconcept f_r_dual(const KripkeContext& kc, const Protoconcept& x) {
  require_member(kc, x);
  Mask a = upper(kc.r_rows, x.extent);
  return {kc.ctx.id(), a, kc.ctx.derive_objects(a)};
}

Protoconcept f_s_dual(const KripkeContext& kc, const Protoconcept& x) {
  require_member(kc, x);
  Mask b = upper(kc.s_rows, x.intent);
  return {kc.ctx.id(), kc.ctx.derive_attributes(b), b};
}

Protoconcept modal_op(const KripkeContext& kc, ModalKind which, const Protoconcept& x) {
  switch (which) {
    case ModalKind::fR: return f_r(kc, x);
    case ModalKind::fS: return f_s(kc, x);
    case ModalKind::fR_dual: return f_r_dual(kc, x);
    case ModalKind::fS_dual: return f_s_dual(kc, x);
  }
  fail(ErrorCode::invalid_argument, "unknown modal operator");
}

KcReport kc_report(const KripkeContext& kc) {
  KcReport rep;
  RelationReport left = relation_report(kc.object_space());
  RelationReport right = relation_report(kc.attribute_space());
  rep.reflexive_left = left.reflexive;
  rep.symmetric_left = left.symmetric;
  rep.transitive_left = left.transitive;
  rep.reflexive_right = right.reflexive;
  rep.symmetric_right = right.symmetric;
  rep.transitive_right = right.transitive;

  // Back and forth conditions for I between (G,R) and (M,S).
  const Context& ctx = kc.ctx;
  bool ok = true;
  for (int g = 0; ok && g < ctx.size_g(); ++g)
    for (int m = 0; ok && m < ctx.size_m(); ++m) {
      if (!ctx.incidence(g, m)) continue;
      for (int g1 : mask_indices(kc.r_rows[static_cast<size_t>(g)])) {
        Mask witnesses = kc.s_rows[static_cast<size_t>(m)] &
                         ctx.object_rows()[static_cast<size_t>(g1)];
        if (!witnesses) ok = false;
      }
      for (int m1 : mask_indices(kc.s_rows[static_cast<size_t>(m)])) {
        Mask witnesses = kc.r_rows[static_cast<size_t>(g)] &
                         ctx.attribute_columns()[static_cast<size_t>(m1)];
        if (!witnesses) ok = false;
      }
    }
  rep.bisimulation = ok;
  return rep;
}

ComplexAlgebra complex_algebra(const KripkeContext& kc, CarrierKind which, const Budgets& budgets) {
  ComplexAlgebra out;
  KindFilter filter =
      which == CarrierKind::Full ? KindFilter::Protoconcepts : KindFilter::Semiconcepts;
  out.carrier = enumerate(kc.ctx, filter, budgets);
  int n = static_cast<int>(out.carrier.size());
  if (n > budgets.algebra_max)
    fail(ErrorCode::budget_exceeded, "operation-table budget exceeded");

  auto index_of = [&](const Protoconcept& x) {
    auto it = std::lower_bound(out.carrier.begin(), out.carrier.end(), x);
    if (it == out.carrier.end() || !(*it == x))
      fail(ErrorCode::verify_failed, "operation left the carrier");
    return static_cast<Elem>(it - out.carrier.begin());
  };

  Dba& alg = out.alg;
  alg.n = n;
  alg.meet_t.resize(static_cast<size_t>(n) * n);
  alg.join_t.resize(static_cast<size_t>(n) * n);
  alg.neg_t.resize(static_cast<size_t>(n));
  alg.lneg_t.resize(static_cast<size_t>(n));
  alg.i_t.resize(static_cast<size_t>(n));
  alg.c_t.resize(static_cast<size_t>(n));
  const Context& ctx = kc.ctx;
  for (int i = 0; i < n; ++i) {
    const Protoconcept& x = out.carrier[static_cast<size_t>(i)];
    alg.neg_t[static_cast<size_t>(i)] = index_of(proto_neg(ctx, x));
    alg.lneg_t[static_cast<size_t>(i)] = index_of(proto_lneg(ctx, x));
    alg.i_t[static_cast<size_t>(i)] = index_of(f_r(kc, x));
    alg.c_t[static_cast<size_t>(i)] = index_of(f_s(kc, x));
    for (int j = 0; j < n; ++j) {
      const Protoconcept& y = out.carrier[static_cast<size_t>(j)];
      alg.meet_t[static_cast<size_t>(i) * n + j] = index_of(proto_meet(ctx, x, y));
      alg.join_t[static_cast<size_t>(i) * n + j] = index_of(proto_join(ctx, x, y));
    }
  }
  alg.top = index_of(proto_top(ctx));
  alg.bot = index_of(proto_bot(ctx));

  if (which == CarrierKind::Full) {
    std::vector<Protoconcept> pure;
    for (int i = 0; i < n; ++i)
      if (alg.meet(i, i) == i || alg.join(i, i) == i)
        pure.push_back(out.carrier[static_cast<size_t>(i)]);
    out.semiconcepts_are_pure_part = pure == enumerate(kc.ctx, KindFilter::Semiconcepts, budgets);
  } else {
    out.semiconcepts_are_pure_part = true;
  }
  return out;
}

FrameBridge frame_bridge(int n, const std::vector<Mask>& rel, const Budgets& budgets) {
  if (n < 1 || n > 31) fail(ErrorCode::budget_exceeded, "frame carrier out of range");
  if (2 * n > 62 || (std::uint64_t{1} << (2 * n)) > budgets.enumeration)
    fail(ErrorCode::budget_exceeded, "enumeration budget exceeded");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  std::vector<Mask> rows;
  for (int i = 0; i < n; ++i) rows.push_back(full_mask(n) & ~(Mask{1} << i));  // incidence i != j
  Context ctx(names, names, rows);
  std::vector<Mask> r = rel;
  FrameBridge out{KripkeContext(std::move(ctx), r, r)};
  const Context& kctx = out.kc.ctx;

  out.prime_is_complement = true;
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    if (kctx.derive_objects(a) != (full_mask(n) & ~a) ||
        kctx.derive_attributes(a) != (full_mask(n) & ~a))
      out.prime_is_complement = false;

  auto f = [&](Mask a) { return Protoconcept{kctx.id(), a, full_mask(n) & ~a}; };

  std::vector<Protoconcept> protos = enumerate(kctx, KindFilter::Protoconcepts, budgets);
  out.negations_agree = true;
  out.f1_dual_of_f2 = true;
  for (const Protoconcept& x : protos) {
    if (proto_neg(kctx, x) != proto_lneg(kctx, x)) out.negations_agree = false;
    if (proto_neg(kctx, proto_neg(kctx, x)) != x) out.negations_agree = false;
    if (f_r(out.kc, x) != proto_neg(kctx, f_s(out.kc, proto_neg(kctx, x))))
      out.f1_dual_of_f2 = false;
  }

  bool iso = protos.size() == (std::uint64_t{1} << n);
  ApproxSpace space = ApproxSpace::make(n, rel);
  for (Mask a = 0; iso && a < (Mask{1} << n); ++a) {
    if (!std::binary_search(protos.begin(), protos.end(), f(a))) iso = false;
    for (Mask b = 0; iso && b < (Mask{1} << n); ++b) {
      if (proto_meet(kctx, f(a), f(b)) != f(a & b)) iso = false;
      if (proto_join(kctx, f(a), f(b)) != f(a | b)) iso = false;
    }
    if (proto_neg(kctx, f(a)) != f(full_mask(n) & ~a)) iso = false;
    if (f_s(out.kc, f(a)) != f(approx_upper(space, a))) iso = false;  // m_R under f
  }
  if (f(full_mask(n)) != proto_top(kctx) || f(0) != proto_bot(kctx)) iso = false;
  out.iso_onto_frame_algebra = iso;
  return out;
}

TermApprox approx_via_terms(const KripkeContext& kc, const Protoconcept& x, const Protoconcept& y) {
  require_member(kc, x);
  require_member(kc, y);
  const Context& ctx = kc.ctx;
  TermApprox out;
  Protoconcept frx = f_r(kc, x), frdx = f_r_dual(kc, x);
  Protoconcept fsy = f_s(kc, y), fsdy = f_s_dual(kc, y);
  out.lower_a = proto_join(ctx, frx, frx);
  out.upper_a = proto_join(ctx, frdx, frdx);
  out.lower_b = proto_meet(ctx, fsdy, fsdy);
  out.upper_b = proto_meet(ctx, fsy, fsy);

  ConceptApprox ca = concept_approx(kc, Side::objects, x.extent);
  ConceptApprox cb = concept_approx(kc, Side::attributes, y.intent);
  out.agrees = out.lower_a == ca.lower && out.upper_a == ca.upper && out.lower_b == cb.lower &&
               out.upper_b == cb.upper;
  return out;
}

}  // namespace kcw
