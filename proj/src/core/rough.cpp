#include "rough.hpp"

#include <algorithm>

#include "kripke.hpp"

namespace kcw {

ApproxSpace ApproxSpace::make(int n, std::vector<Mask> rows) {
  if (n < 0 || n > 64) fail(ErrorCode::budget_exceeded, "approximation spaces are limited to 64 points");
  if (static_cast<int>(rows.size()) != n)
    fail(ErrorCode::dimension_mismatch, "relation row count does not match carrier size");
  for (Mask r : rows)
    if (!subset(r, full_mask(n))) fail(ErrorCode::dimension_mismatch, "relation row out of range");
  return ApproxSpace{n, std::move(rows)};
}

Mask approx_lower(const ApproxSpace& space, Mask a) {
  if (!subset(a, full_mask(space.n))) fail(ErrorCode::dimension_mismatch, "set out of range");
  Mask out = 0;
  for (int x = 0; x < space.n; ++x)
    if (subset(space.rel[static_cast<size_t>(x)], a)) out = with_bit(out, x);
  return out;
}

Mask approx_upper(const ApproxSpace& space, Mask a) {
  if (!subset(a, full_mask(space.n))) fail(ErrorCode::dimension_mismatch, "set out of range");
  Mask out = 0;
  for (int x = 0; x < space.n; ++x)
    if (space.rel[static_cast<size_t>(x)] & a) out = with_bit(out, x);
  return out;
}

Mask approx(const ApproxSpace& space, ApproxMode mode, Mask a) {
  return mode == ApproxMode::lower ? approx_lower(space, a) : approx_upper(space, a);
}

RelationReport relation_report(const ApproxSpace& space) {
  RelationReport rep;
  rep.reflexive = true;
  rep.symmetric = true;
  rep.transitive = true;
  for (int x = 0; x < space.n; ++x) {
    Mask row = space.rel[static_cast<size_t>(x)];
    if (!has_bit(row, x)) rep.reflexive = false;
    for (int y : mask_indices(row)) {
      if (!has_bit(space.rel[static_cast<size_t>(y)], x)) rep.symmetric = false;
      if (!subset(space.rel[static_cast<size_t>(y)], row)) rep.transitive = false;
    }
  }
  return rep;
}

std::vector<Mask> relation_classes(const ApproxSpace& space) {
  std::vector<Mask> classes;
  Mask seen = 0;
  for (int x = 0; x < space.n; ++x) {
    if (has_bit(seen, x)) continue;
    Mask cls = space.rel[static_cast<size_t>(x)] | (Mask{1} << x);
    classes.push_back(cls);
    seen |= cls;
  }
  return classes;
}

std::pair<ApproxSpace, RelationReport> induced_relation(const Context& ctx, InducedKind kind) {
  bool on_objects = kind == InducedKind::E1 || kind == InducedKind::J1;
  bool inclusion = kind == InducedKind::J1 || kind == InducedKind::J2;
  int n = on_objects ? ctx.size_g() : ctx.size_m();
  const std::vector<Mask>& vecs = on_objects ? ctx.object_rows() : ctx.attribute_columns();
  std::vector<Mask> rows(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool related = inclusion ? subset(vecs[static_cast<size_t>(x)], vecs[static_cast<size_t>(y)])
                               : vecs[static_cast<size_t>(x)] == vecs[static_cast<size_t>(y)];
      if (related) rows[static_cast<size_t>(x)] = with_bit(rows[static_cast<size_t>(x)], y);
    }
  ApproxSpace space = ApproxSpace::make(n, std::move(rows));
  RelationReport rep = relation_report(space);
  return {std::move(space), rep};
}

bool is_feasible(const Context& ctx, Side side, Mask x) {
  return side == Side::objects ? ctx.closure_objects(x) == x : ctx.closure_attributes(x) == x;
}

ConceptApprox concept_approx(const KripkeContext& kc, Side side, Mask x) {
  const Context& ctx = kc.ctx;
  ConceptApprox out;
  if (side == Side::objects) {
    if (!subset(x, ctx.all_objects())) fail(ErrorCode::dimension_mismatch, "object set out of range");
    if (is_feasible(ctx, side, x)) {
      out.exact = true;
      out.lower = out.upper = Protoconcept{ctx.id(), x, ctx.derive_objects(x)};
      return out;
    }
    ApproxSpace space = kc.object_space();
    Mask lo = approx_lower(space, x), hi = approx_upper(space, x);
    out.lower = Protoconcept{ctx.id(), ctx.closure_objects(lo), ctx.derive_objects(lo)};
    out.upper = Protoconcept{ctx.id(), ctx.closure_objects(hi), ctx.derive_objects(hi)};
  } else {
    if (!subset(x, ctx.all_attributes()))
      fail(ErrorCode::dimension_mismatch, "attribute set out of range");
    if (is_feasible(ctx, side, x)) {
      out.exact = true;
      out.lower = out.upper = Protoconcept{ctx.id(), ctx.derive_attributes(x), x};
      return out;
    }
    ApproxSpace space = kc.attribute_space();
    // The attribute side swaps: the lower pair uses the upper approximation.
    Mask hi = approx_upper(space, x), lo = approx_lower(space, x);
    out.lower = Protoconcept{ctx.id(), ctx.derive_attributes(hi), ctx.closure_attributes(hi)};
    out.upper = Protoconcept{ctx.id(), ctx.derive_attributes(lo), ctx.closure_attributes(lo)};
  }
  return out;
}

PairApprox pair_approx(const KripkeContext& kc, Mask a, Mask b) {
  const Context& ctx = kc.ctx;
  if (!subset(a, ctx.all_objects()) || !subset(b, ctx.all_attributes()))
    fail(ErrorCode::dimension_mismatch, "pair does not fit the context");
  PairApprox out;
  if (is_concept(ctx, a, b)) {
    out.is_concept = true;
    out.lower = out.upper = Protoconcept{ctx.id(), a, b};
    return out;
  }
  ConceptApprox ca = concept_approx(kc, Side::objects, a);
  ConceptApprox cb = concept_approx(kc, Side::attributes, b);
  out.lower = proto_meet(ctx, ca.lower, cb.lower);
  out.upper = proto_join(ctx, ca.upper, cb.upper);
  return out;
}

}  // namespace kcw
