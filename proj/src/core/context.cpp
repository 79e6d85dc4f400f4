#include "context.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

namespace kcw {

namespace {
std::atomic<std::uint32_t> next_context_id{1};

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorCode::malformed_input, std::string(what) + " name is empty");
    if (!seen.insert(n).second)
      fail(ErrorCode::malformed_input, std::string(what) + " name repeated: " + n);
  }
}
}  // namespace

Context::Context(std::vector<std::string> objects, std::vector<std::string> attributes,
                 std::vector<Mask> object_rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(object_rows)) {
  if (objects_.size() > 64 || attributes_.size() > 64)
    fail(ErrorCode::budget_exceeded, "contexts are limited to 64 objects and 64 attributes");
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");
  if (rows_.size() != objects_.size())
    fail(ErrorCode::dimension_mismatch, "incidence row count does not match object count");
  for (Mask row : rows_)
    if (!subset(row, all_attributes()))
      fail(ErrorCode::dimension_mismatch, "incidence row exceeds attribute count");
  cols_.assign(attributes_.size(), 0);
  for (int g = 0; g < size_g(); ++g)
    for (int m = 0; m < size_m(); ++m)
      if (has_bit(rows_[static_cast<size_t>(g)], m))
        cols_[static_cast<size_t>(m)] = with_bit(cols_[static_cast<size_t>(m)], g);
  id_ = next_context_id.fetch_add(1);
}

Context Context::from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                           const std::vector<std::string>& rows) {
  std::vector<Mask> packed;
  packed.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != attributes.size())
      fail(ErrorCode::dimension_mismatch, "incidence row width does not match attribute count");
    Mask m = 0;
    for (size_t j = 0; j < row.size(); ++j) {
      char c = row[j];
      if (c == 'X' || c == 'x' || c == '1')
        m = with_bit(m, static_cast<int>(j));
      else if (c != '.' && c != '0')
        fail(ErrorCode::malformed_input, std::string("bad incidence character '") + c + "'");
    }
    packed.push_back(m);
  }
  return Context(std::move(objects), std::move(attributes), std::move(packed));
}

Mask Context::derive_objects(Mask a) const {
  if (!subset(a, all_objects())) fail(ErrorCode::dimension_mismatch, "object set out of range");
  Mask common = all_attributes();
  for (int g : mask_indices(a)) common &= rows_[static_cast<size_t>(g)];
  return common;
}

Mask Context::derive_attributes(Mask b) const {
  if (!subset(b, all_attributes())) fail(ErrorCode::dimension_mismatch, "attribute set out of range");
  Mask common = all_objects();
  for (int m : mask_indices(b)) common &= cols_[static_cast<size_t>(m)];
  return common;
}

std::optional<int> Context::object_index(const std::string& name) const {
  for (size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Context::attribute_index(const std::string& name) const {
  for (size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::string> Context::object_names(Mask a) const {
  std::vector<std::string> out;
  for (int i : mask_indices(a)) out.push_back(objects_[static_cast<size_t>(i)]);
  return out;
}

std::vector<std::string> Context::attribute_names(Mask b) const {
  std::vector<std::string> out;
  for (int i : mask_indices(b)) out.push_back(attributes_[static_cast<size_t>(i)]);
  return out;
}

Mask derive(const Context& ctx, Side side, Mask x) {
  return side == Side::objects ? ctx.derive_objects(x) : ctx.derive_attributes(x);
}

bool is_protoconcept(const Context& ctx, Mask a, Mask b) {
  return ctx.closure_objects(a) == ctx.derive_attributes(b);
}

bool is_semiconcept(const Context& ctx, Mask a, Mask b) {
  return ctx.derive_objects(a) == b || ctx.derive_attributes(b) == a;
}

bool is_concept(const Context& ctx, Mask a, Mask b) {
  return ctx.derive_objects(a) == b && ctx.derive_attributes(b) == a;
}

ConceptKind classify(const Context& ctx, Mask a, Mask b) {
  if (!subset(a, ctx.all_objects()) || !subset(b, ctx.all_attributes()))
    fail(ErrorCode::dimension_mismatch, "set does not fit the context");
  Mask a_p = ctx.derive_objects(a);
  Mask b_p = ctx.derive_attributes(b);
  if (a_p == b && b_p == a) return ConceptKind::Concept;
  if (a_p == b || b_p == a) return ConceptKind::SemiconceptOnly;
  if (ctx.derive_attributes(a_p) == b_p) return ConceptKind::ProtoconceptOnly;
  return ConceptKind::None;
}

Protoconcept make_protoconcept(const Context& ctx, Mask a, Mask b) {
  if (!subset(a, ctx.all_objects()) || !subset(b, ctx.all_attributes()))
    fail(ErrorCode::dimension_mismatch, "set does not fit the context");
  if (!is_protoconcept(ctx, a, b))
    fail(ErrorCode::invalid_argument, "pair fails the protoconcept condition");
  return Protoconcept{ctx.id(), a, b};
}

namespace {
void require_same_context(const Context& ctx, const Protoconcept& x) {
  if (x.ctx_id != ctx.id())
    fail(ErrorCode::context_mismatch, "protoconcept belongs to a different context");
}
}  // namespace

Protoconcept proto_top(const Context& ctx) { return {ctx.id(), ctx.all_objects(), 0}; }
Protoconcept proto_bot(const Context& ctx) { return {ctx.id(), 0, ctx.all_attributes()}; }

Protoconcept proto_meet(const Context& ctx, const Protoconcept& x, const Protoconcept& y) {
  require_same_context(ctx, x);
  require_same_context(ctx, y);
  Mask a = x.extent & y.extent;
  return {ctx.id(), a, ctx.derive_objects(a)};
}

Protoconcept proto_join(const Context& ctx, const Protoconcept& x, const Protoconcept& y) {
  require_same_context(ctx, x);
  require_same_context(ctx, y);
  Mask b = x.intent & y.intent;
  return {ctx.id(), ctx.derive_attributes(b), b};
}

Protoconcept proto_neg(const Context& ctx, const Protoconcept& x) {
  require_same_context(ctx, x);
  Mask a = ctx.all_objects() & ~x.extent;
  return {ctx.id(), a, ctx.derive_objects(a)};
}

Protoconcept proto_lneg(const Context& ctx, const Protoconcept& x) {
  require_same_context(ctx, x);
  Mask b = ctx.all_attributes() & ~x.intent;
  return {ctx.id(), ctx.derive_attributes(b), b};
}

Protoconcept proto_vee(const Context& ctx, const Protoconcept& x, const Protoconcept& y) {
  return proto_neg(ctx, proto_meet(ctx, proto_neg(ctx, x), proto_neg(ctx, y)));
}

Protoconcept proto_wedge(const Context& ctx, const Protoconcept& x, const Protoconcept& y) {
  return proto_lneg(ctx, proto_join(ctx, proto_lneg(ctx, x), proto_lneg(ctx, y)));
}

bool proto_leq(const Context& ctx, const Protoconcept& x, const Protoconcept& y) {
  require_same_context(ctx, x);
  require_same_context(ctx, y);
  return subset(x.extent, y.extent) && subset(y.intent, x.intent);
}

std::vector<Protoconcept> enumerate(const Context& ctx, KindFilter filter, const Budgets& budgets) {
  int g = ctx.size_g(), m = ctx.size_m();
  if (g + m > 62 || (std::uint64_t{1} << (g + m)) > budgets.enumeration)
    fail(ErrorCode::budget_exceeded, "enumeration budget exceeded");
  std::vector<Protoconcept> out;
  auto emit = [&](Mask a, Mask a_prime, Mask b, Mask b_prime) {
    if (filter != KindFilter::Protoconcepts) {
      bool left = a_prime == b;
      bool right = b_prime == a;
      if (filter == KindFilter::Semiconcepts && !(left || right)) return;
      if (filter == KindFilter::Concepts && !(left && right)) return;
    }
    out.push_back({ctx.id(), a, b});
  };
  // Cache the derivations of the smaller side; recompute the other per row.
  if (m <= g) {
    std::vector<Mask> b_prime(std::size_t{1} << m);
    for (Mask b = 0; b < (Mask{1} << m); ++b) b_prime[b] = ctx.derive_attributes(b);
    for (Mask a = 0; a < (Mask{1} << g); ++a) {
      Mask a_prime = ctx.derive_objects(a);
      Mask a_closure = ctx.derive_attributes(a_prime);
      for (Mask b = 0; b < (Mask{1} << m); ++b)
        if (a_closure == b_prime[b]) emit(a, a_prime, b, b_prime[b]);
    }
  } else {
    std::vector<Mask> a_prime(std::size_t{1} << g), a_closure(std::size_t{1} << g);
    for (Mask a = 0; a < (Mask{1} << g); ++a) {
      a_prime[a] = ctx.derive_objects(a);
      a_closure[a] = ctx.derive_attributes(a_prime[a]);
    }
    for (Mask b = 0; b < (Mask{1} << m); ++b) {
      Mask b_prime = ctx.derive_attributes(b);
      for (Mask a = 0; a < (Mask{1} << g); ++a)
        if (a_closure[a] == b_prime) emit(a, a_prime[a], b, b_prime);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BooleanParts boolean_parts(const Context& ctx, const Budgets& budgets) {
  BooleanParts parts;
  for (const auto& x : enumerate(ctx, KindFilter::Protoconcepts, budgets)) {
    if (proto_meet(ctx, x, x) == x) parts.meet_part.push_back(x);
    if (proto_join(ctx, x, x) == x) parts.join_part.push_back(x);
  }
  int g = ctx.size_g(), m = ctx.size_m();

  auto index_of = [](const std::vector<Protoconcept>& v, const Protoconcept& x) {
    return std::binary_search(v.begin(), v.end(), x);
  };

  // A |-> (A, A'): bijective onto the meet part and a homomorphism
  // (P(G), cap, cup, c, empty, G) -> (meet part, meet, vee, neg, bot, neg bot).
  bool ok = parts.meet_part.size() == (std::uint64_t{1} << g);
  auto f = [&](Mask a) { return Protoconcept{ctx.id(), a, ctx.derive_objects(a)}; };
  for (Mask a = 0; ok && a < (Mask{1} << g); ++a) {
    if (!index_of(parts.meet_part, f(a))) ok = false;
    for (Mask c = 0; ok && c < (Mask{1} << g); ++c) {
      if (proto_meet(ctx, f(a), f(c)) != f(a & c)) ok = false;
      if (proto_vee(ctx, f(a), f(c)) != f(a | c)) ok = false;
    }
    if (proto_neg(ctx, f(a)) != f(ctx.all_objects() & ~a)) ok = false;
  }
  if (f(0) != proto_bot(ctx)) ok = false;
  if (f(ctx.all_objects()) != proto_neg(ctx, proto_bot(ctx))) ok = false;
  parts.iso_ok = ok;

  // B |-> (B', B): order-reversing, with cap |-> join, cup |-> wedge.
  ok = parts.join_part.size() == (std::uint64_t{1} << m);
  auto h = [&](Mask b) { return Protoconcept{ctx.id(), ctx.derive_attributes(b), b}; };
  for (Mask b = 0; ok && b < (Mask{1} << m); ++b) {
    if (!index_of(parts.join_part, h(b))) ok = false;
    for (Mask c = 0; ok && c < (Mask{1} << m); ++c) {
      if (proto_join(ctx, h(b), h(c)) != h(b & c)) ok = false;
      if (proto_wedge(ctx, h(b), h(c)) != h(b | c)) ok = false;
    }
    if (proto_lneg(ctx, h(b)) != h(ctx.all_attributes() & ~b)) ok = false;
  }
  if (h(0) != proto_top(ctx)) ok = false;
  if (h(ctx.all_attributes()) != proto_lneg(ctx, proto_top(ctx))) ok = false;
  parts.anti_iso_ok = ok;

  if (!parts.iso_ok || !parts.anti_iso_ok)
    fail(ErrorCode::verify_failed, "Boolean part witness map failed verification");
  return parts;
}

}  // namespace kcw
