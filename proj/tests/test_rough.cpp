#include <doctest.h>

#include "core/fixtures.hpp"
#include "core/kripke.hpp"
#include "core/rough.hpp"
#include "oracle.hpp"

using namespace kcw;
using oracle::StrSet;

namespace {
Protoconcept pc(const Context& ctx, StrSet ext, StrSet intent) {
  return Protoconcept{ctx.id(), oracle::object_mask(ctx, ext), oracle::attribute_mask(ctx, intent)};
}
}  // namespace

TEST_CASE("lower and upper approximation on the water-life context") {
  Context t1 = fixtures::table1_context();
  auto [e1, rep] = induced_relation(t1, InducedKind::E1);
  CHECK(rep.equivalence());
  Mask a = oracle::object_mask(t1, {"Leech", "Bream", "Dog"});
  CHECK(oracle::object_set(t1, approx_lower(e1, a)) == StrSet{"Leech", "Bream"});
  CHECK(oracle::object_set(t1, approx_upper(e1, a)) == StrSet{"Leech", "Bream", "Dog", "Cat"});
  CHECK(approx_lower(e1, t1.all_objects()) == t1.all_objects());
}

TEST_CASE("induced relations and their classes") {
  Context t1 = fixtures::table1_context();
  auto [e2, rep2] = induced_relation(t1, InducedKind::E2);
  CHECK(rep2.equivalence());
  auto classes = relation_classes(e2);
  REQUIRE(classes.size() == 3);
  CHECK(oracle::attribute_set(t1, classes[0]) == StrSet{"a", "g"});
  CHECK(oracle::attribute_set(t1, classes[1]) == StrSet{"b"});
  CHECK(oracle::attribute_set(t1, classes[2]) == StrSet{"c"});

  Context t2 = fixtures::table2_context();
  auto [e1, rep1] = induced_relation(t2, InducedKind::E1);
  CHECK(rep1.equivalence());
  auto t2_classes = relation_classes(e1);
  REQUIRE(t2_classes.size() == 3);
  CHECK(oracle::object_set(t2, t2_classes[0]) == StrSet{"D1", "D4"});
  CHECK(oracle::object_set(t2, t2_classes[1]) == StrSet{"D2"});
  CHECK(oracle::object_set(t2, t2_classes[2]) == StrSet{"D3"});

  oracle::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Context ctx = oracle::random_context(rng, 5, 5);
    auto [j1, repj] = induced_relation(ctx, InducedKind::J1);
    CHECK(repj.reflexive);
    CHECK(repj.preorder());
    auto [j2, repj2] = induced_relation(ctx, InducedKind::J2);
    CHECK(repj2.preorder());
  }
}

TEST_CASE("approximation laws, exhaustive for small spaces") {
  auto check_space = [](const ApproxSpace& space) {
    int n = space.n;
    RelationReport rep = relation_report(space);
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
      Mask comp = full_mask(n) & ~a;
      CHECK(approx_upper(space, a) == (full_mask(n) & ~approx_lower(space, comp)));
      for (Mask b = 0; b < (Mask{1} << n); ++b) {
        CHECK(approx_lower(space, a & b) == (approx_lower(space, a) & approx_lower(space, b)));
        CHECK(approx_upper(space, a | b) == (approx_upper(space, a) | approx_upper(space, b)));
        if (subset(a, b)) {
          CHECK(subset(approx_lower(space, a), approx_lower(space, b)));
          CHECK(subset(approx_upper(space, a), approx_upper(space, b)));
        }
      }
      if (rep.preorder()) {
        CHECK(subset(approx_lower(space, a), a));
        CHECK(subset(a, approx_upper(space, a)));
        CHECK(approx_lower(space, approx_lower(space, a)) == approx_lower(space, a));
        CHECK(approx_upper(space, approx_upper(space, a)) == approx_upper(space, a));
      }
    }
    CHECK(approx_lower(space, full_mask(n)) == full_mask(n));
  };

  for (int n = 1; n <= 3; ++n)  // every relation
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      std::vector<Mask> rows(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((bits >> (i * n + j)) & 1) rows[static_cast<size_t>(i)] = with_bit(rows[static_cast<size_t>(i)], j);
      check_space(ApproxSpace::make(n, rows));
    }

  oracle::Rng rng(77);
  for (int n = 4; n <= 5; ++n)
    for (int i = 0; i < 400; ++i) {
      check_space(ApproxSpace::make(n, oracle::random_relation(rng, n)));
      check_space(
          ApproxSpace::make(n, oracle::reflexive_transitive_closure(oracle::random_relation(rng, n))));
    }
}

TEST_CASE("empty relation rows put points in every lower approximation") {
  ApproxSpace space = ApproxSpace::make(2, {0, Mask{3}});
  CHECK(approx_lower(space, 0) == Mask{1});
  RelationReport rep = relation_report(space);
  CHECK_FALSE(rep.reflexive);
}

TEST_CASE("concept approximations of the worked example") {
  KripkeContext kc = make_kc_ds(fixtures::table1_context());
  const Context& t1 = kc.ctx;

  Mask a = oracle::object_mask(t1, {"Leech", "Bream", "Dog"});
  CHECK_FALSE(is_feasible(t1, Side::objects, a));
  ConceptApprox ca = concept_approx(kc, Side::objects, a);
  CHECK_FALSE(ca.exact);
  CHECK(ca.lower == pc(t1, {"Leech", "Bream", "Frog"}, {"a", "b", "g"}));
  CHECK(ca.upper == pc(t1, {"Leech", "Bream", "Frog", "Dog", "Cat"}, {"a", "g"}));

  Mask b = oracle::attribute_mask(t1, {"a", "c"});
  CHECK_FALSE(is_feasible(t1, Side::attributes, b));
  ConceptApprox cb = concept_approx(kc, Side::attributes, b);
  CHECK_FALSE(cb.exact);
  CHECK(cb.lower == pc(t1, {"Frog", "Dog", "Cat"}, {"a", "g", "c"}));
  CHECK(cb.upper == cb.lower);

  Mask frog = oracle::object_mask(t1, {"Frog"});
  CHECK(is_feasible(t1, Side::objects, frog));
  ConceptApprox cf = concept_approx(kc, Side::objects, frog);
  CHECK(cf.exact);
  CHECK(cf.lower == pc(t1, {"Frog"}, {"a", "b", "c", "g"}));
}

TEST_CASE("pair approximations of the worked example") {
  KripkeContext kc = make_kc_ds(fixtures::table1_context());
  const Context& t1 = kc.ctx;

  Mask a = oracle::object_mask(t1, {"Leech", "Bream", "Dog"});
  Mask b = oracle::attribute_mask(t1, {"a", "c"});
  PairApprox pa = pair_approx(kc, a, b);
  CHECK_FALSE(pa.is_concept);
  CHECK(pa.lower == pc(t1, {"Frog"}, {"a", "b", "c", "g"}));
  CHECK(pa.upper == pc(t1, {"Leech", "Bream", "Frog", "Dog", "Cat"}, {"a", "g"}));

  PairApprox exact = pair_approx(kc, oracle::object_mask(t1, {"Frog"}),
                                 oracle::attribute_mask(t1, {"a", "b", "c", "g"}));
  CHECK(exact.is_concept);
  CHECK(exact.lower == pc(t1, {"Frog"}, {"a", "b", "c", "g"}));
}

TEST_CASE("concept approximations classify as semiconcepts; bounds are ordered") {
  oracle::Rng rng(2024);
  for (int i = 0; i < 25; ++i) {
    KripkeContext kc = make_kc_ds(oracle::random_context(rng, 4, 4));
    const Context& ctx = kc.ctx;
    for (Mask a = 0; a < (Mask{1} << ctx.size_g()); ++a) {
      ConceptApprox ca = concept_approx(kc, Side::objects, a);
      CHECK(classify(ctx, ca.lower.extent, ca.lower.intent) >= ConceptKind::SemiconceptOnly);
      CHECK(classify(ctx, ca.upper.extent, ca.upper.intent) >= ConceptKind::SemiconceptOnly);
      for (Mask b = 0; b < (Mask{1} << ctx.size_m()); ++b) {
        PairApprox pa = pair_approx(kc, a, b);
        if (!pa.is_concept) {
          CHECK(is_protoconcept(ctx, pa.lower.extent, pa.lower.intent));
          CHECK(is_protoconcept(ctx, pa.upper.extent, pa.upper.intent));
          CHECK(proto_leq(ctx, pa.lower, pa.upper));
        }
      }
    }
  }
}
