#include <doctest.h>

#include <algorithm>

#include "core/context.hpp"
#include "core/fixtures.hpp"
#include "oracle.hpp"

using namespace kcw;
using oracle::StrSet;

namespace {
std::vector<Context> all_contexts_up_to(int max_g, int max_m) {
  std::vector<Context> out;
  for (int g = 1; g <= max_g; ++g)
    for (int m = 1; m <= max_m; ++m) {
      std::vector<std::string> objects, attributes;
      for (int i = 0; i < g; ++i) objects.push_back("g" + std::to_string(i));
      for (int i = 0; i < m; ++i) attributes.push_back("m" + std::to_string(i));
      for (std::uint64_t inc = 0; inc < (std::uint64_t{1} << (g * m)); ++inc) {
        std::vector<Mask> rows(static_cast<size_t>(g), 0);
        for (int i = 0; i < g; ++i)
          for (int j = 0; j < m; ++j)
            if ((inc >> (i * m + j)) & 1) rows[static_cast<size_t>(i)] = with_bit(rows[static_cast<size_t>(i)], j);
        out.emplace_back(objects, attributes, rows);
      }
    }
  return out;
}
}  // namespace

TEST_CASE("derive on the worked contexts") {
  Context t3 = fixtures::table3_context();
  CHECK(oracle::attribute_set(t3, t3.derive_objects(oracle::object_mask(t3, {"c", "e"}))) ==
        StrSet{"a"});
  CHECK(t3.derive_objects(0) == t3.all_attributes());

  Context t1 = fixtures::table1_context();
  CHECK(oracle::attribute_set(t1, t1.derive_objects(oracle::object_mask(t1, {"Leech", "Bream"}))) ==
        StrSet{"a", "b", "g"});
}

TEST_CASE("derive agrees with the naive oracle") {
  oracle::Rng rng(0xC0FFEE);
  std::vector<Context> samples = {fixtures::table1_context(), fixtures::table2_context(),
                                  fixtures::table3_context()};
  for (int i = 0; i < 40; ++i) samples.push_back(oracle::random_context(rng, 5, 5));
  for (const Context& ctx : samples) {
    oracle::NaiveContext naive = oracle::NaiveContext::of(ctx);
    for (Mask a = 0; a < (Mask{1} << ctx.size_g()); ++a)
      CHECK(oracle::attribute_set(ctx, ctx.derive_objects(a)) ==
            naive.derive_objects(oracle::object_set(ctx, a)));
    for (Mask b = 0; b < (Mask{1} << ctx.size_m()); ++b)
      CHECK(oracle::object_set(ctx, ctx.derive_attributes(b)) ==
            naive.derive_attributes(oracle::attribute_set(ctx, b)));
  }
}

TEST_CASE("closure laws") {
  oracle::Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    Context ctx = oracle::random_context(rng, 4, 4);
    for (Mask a = 0; a < (Mask{1} << ctx.size_g()); ++a) {
      Mask prime = ctx.derive_objects(a);
      CHECK(subset(a, ctx.closure_objects(a)));
      CHECK(ctx.derive_objects(ctx.closure_objects(a)) == prime);  // A' = A'''
      for (Mask x = 0; x < (Mask{1} << ctx.size_g()); ++x)
        if (subset(a, x)) CHECK(subset(ctx.derive_objects(x), prime));
    }
  }
}

TEST_CASE("classify on the worked contexts") {
  Context t3 = fixtures::table3_context();
  CHECK(classify(t3, oracle::object_mask(t3, {"c", "e"}), oracle::attribute_mask(t3, {"a"})) ==
        ConceptKind::Concept);

  Context t1 = fixtures::table1_context();
  Mask a = oracle::object_mask(t1, {"Leech", "Bream"});
  Mask b = oracle::attribute_mask(t1, {"a", "b"});
  CHECK(classify(t1, a, b) == ConceptKind::ProtoconceptOnly);
  CHECK(oracle::object_set(t1, t1.closure_objects(a)) == StrSet{"Leech", "Bream", "Frog"});

  // (G, empty) is top; at least a semiconcept in any context
  for (const Context& ctx : {fixtures::table1_context(), fixtures::table3_context()}) {
    ConceptKind kind = classify(ctx, ctx.all_objects(), 0);
    CHECK(kind >= ConceptKind::SemiconceptOnly);
  }
  CHECK_THROWS_AS(classify(t3, Mask{1} << 60, 0), Error);
}

TEST_CASE("enumerate on the worked contexts") {
  Context t3 = fixtures::table3_context();
  auto protos = enumerate(t3, KindFilter::Protoconcepts);
  CHECK(protos.size() == 8);

  auto concepts = enumerate(t3, KindFilter::Concepts);
  REQUIRE(concepts.size() == 4);
  auto has = [&](StrSet ext, StrSet intent) {
    Protoconcept want{t3.id(), oracle::object_mask(t3, ext), oracle::attribute_mask(t3, intent)};
    return std::find(concepts.begin(), concepts.end(), want) != concepts.end();
  };
  CHECK(has({"c", "d", "e"}, {}));
  CHECK(has({"c", "e"}, {"a"}));
  CHECK(has({"d"}, {"b"}));
  CHECK(has({}, {"a", "b"}));

  Context one = Context::from_rows({"g"}, {"m"}, {"X"});
  CHECK(enumerate(one, KindFilter::Protoconcepts).size() == 4);
}

TEST_CASE("enumerate matches a direct scan and keeps the inclusion chain") {
  oracle::Rng rng(99);
  for (int i = 0; i < 25; ++i) {
    Context ctx = oracle::random_context(rng, 4, 4);
    auto protos = enumerate(ctx, KindFilter::Protoconcepts);
    auto semis = enumerate(ctx, KindFilter::Semiconcepts);
    auto concepts = enumerate(ctx, KindFilter::Concepts);
    CHECK(std::is_sorted(protos.begin(), protos.end()));
    CHECK(std::includes(protos.begin(), protos.end(), semis.begin(), semis.end()));
    CHECK(std::includes(semis.begin(), semis.end(), concepts.begin(), concepts.end()));

    size_t count = 0;
    for (Mask a = 0; a < (Mask{1} << ctx.size_g()); ++a)
      for (Mask b = 0; b < (Mask{1} << ctx.size_m()); ++b) {
        ConceptKind kind = classify(ctx, a, b);
        if (kind != ConceptKind::None) ++count;
        bool in_protos = std::binary_search(protos.begin(), protos.end(),
                                            Protoconcept{ctx.id(), a, b});
        CHECK(in_protos == (kind != ConceptKind::None));
        bool in_semis =
            std::binary_search(semis.begin(), semis.end(), Protoconcept{ctx.id(), a, b});
        CHECK(in_semis == (kind >= ConceptKind::SemiconceptOnly));
      }
    CHECK(count == protos.size());
  }
}

TEST_CASE("protoconcept operations on the worked contexts") {
  Context t3 = fixtures::table3_context();
  Protoconcept ce_a = make_protoconcept(t3, oracle::object_mask(t3, {"c", "e"}),
                                        oracle::attribute_mask(t3, {"a"}));
  Protoconcept d_b =
      make_protoconcept(t3, oracle::object_mask(t3, {"d"}), oracle::attribute_mask(t3, {"b"}));

  CHECK(proto_meet(t3, ce_a, d_b) == proto_bot(t3));
  CHECK(proto_neg(t3, ce_a) == d_b);

  for (const Protoconcept& x : enumerate(t3, KindFilter::Protoconcepts)) {
    CHECK(proto_meet(t3, x, proto_bot(t3)) == proto_bot(t3));  // x meet bot = bot
    CHECK(proto_leq(t3, proto_bot(t3), x));
    CHECK(proto_leq(t3, x, x));
  }
  CHECK_FALSE(proto_leq(t3, d_b, ce_a));
}

TEST_CASE("operation results satisfy the protoconcept condition") {
  oracle::Rng rng(1234);
  for (int i = 0; i < 15; ++i) {
    Context ctx = oracle::random_context(rng, 3, 3);
    auto protos = enumerate(ctx, KindFilter::Protoconcepts);
    for (const Protoconcept& x : protos) {
      auto nx = proto_neg(ctx, x);
      auto lx = proto_lneg(ctx, x);
      CHECK(is_protoconcept(ctx, nx.extent, nx.intent));
      CHECK(is_protoconcept(ctx, lx.extent, lx.intent));
      CHECK(proto_meet(ctx, nx, nx) == nx);  // negations are idempotent on their side
      CHECK(proto_join(ctx, lx, lx) == lx);
      for (const Protoconcept& y : protos) {
        auto m = proto_meet(ctx, x, y);
        auto j = proto_join(ctx, x, y);
        CHECK(is_protoconcept(ctx, m.extent, m.intent));
        CHECK(is_protoconcept(ctx, j.extent, j.intent));
      }
    }
  }
}

TEST_CASE("cross-context operations are rejected") {
  Context t3 = fixtures::table3_context();
  Context other = fixtures::table3_context();  // same table, distinct identity
  CHECK_THROWS_AS(proto_meet(t3, proto_top(t3), proto_top(other)), Error);
  CHECK_THROWS_AS(proto_leq(t3, proto_top(other), proto_top(t3)), Error);
  CHECK_THROWS_AS(make_protoconcept(t3, oracle::object_mask(t3, {"c"}),
                                    oracle::attribute_mask(t3, {"b"})),
                  Error);
}

TEST_CASE("the order is a partial order, exhaustively over small contexts") {
  for (const Context& ctx : all_contexts_up_to(3, 3)) {
    auto protos = enumerate(ctx, KindFilter::Protoconcepts);
    for (const auto& x : protos)
      for (const auto& y : protos) {
        if (proto_leq(ctx, x, y) && proto_leq(ctx, y, x)) CHECK(x == y);
        for (const auto& z : protos)
          if (proto_leq(ctx, x, y) && proto_leq(ctx, y, z)) CHECK(proto_leq(ctx, x, z));
      }
  }
}

TEST_CASE("boolean parts sizes and witness verification") {
  Context t3 = fixtures::table3_context();
  BooleanParts parts = boolean_parts(t3);
  CHECK(parts.meet_part.size() == 8);  // 2^|G|
  CHECK(parts.join_part.size() == 4);  // 2^|M|
  CHECK(parts.iso_ok);
  CHECK(parts.anti_iso_ok);

  Context one = Context::from_rows({"g"}, {"m"}, {"X"});
  BooleanParts small = boolean_parts(one);
  CHECK(small.meet_part.size() == 2);
  CHECK(small.join_part.size() == 2);
}

TEST_CASE("enumeration budget is enforced") {
  std::vector<std::string> objects, attributes;
  for (int i = 0; i < 20; ++i) objects.push_back("g" + std::to_string(i));
  for (int i = 0; i < 20; ++i) attributes.push_back("m" + std::to_string(i));
  Context big(objects, attributes, std::vector<Mask>(20, 0));
  Budgets tight;
  tight.enumeration = 1 << 10;
  CHECK_THROWS_AS(enumerate(big, KindFilter::Protoconcepts, tight), Error);
}
