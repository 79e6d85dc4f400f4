#include <doctest.h>

#include <cstdlib>
#include <memory>
#include <string>

#include <json.hpp>

#include "kcw/kcw.h"

using nlohmann::json;

namespace {

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("KCW_DATA_DIR");
  return std::string(dir ? dir : "data") + "/" + name;
}

struct Result {
  kcw_result* res;
  explicit Result(kcw_result* r) : res(r) {}
  ~Result() { kcw_result_free(res); }
  int status() const { return kcw_result_status(res); }
  int verdict() const { return kcw_result_verdict(res); }
  json data() const { return json::parse(kcw_result_json(res)); }
  std::string text() const { return kcw_result_text(res); }
};

}  // namespace

TEST_CASE("context handles and operations") {
  kcw_context* ctx = nullptr;
  Result loaded(kcw_context_load(data_file("table1.cxt").c_str(), &ctx));
  REQUIRE(loaded.status() == KCW_OK);
  REQUIRE(ctx != nullptr);

  Result derived(kcw_context_derive(ctx, "objects", "Leech,Bream"));
  CHECK(derived.status() == KCW_OK);
  CHECK(derived.data()["derived"] == json::array({"a", "b", "g"}));

  Result classified(kcw_context_classify(ctx, "Leech,Bream", "a,b"));
  CHECK(classified.data()["kind"] == "protoconcept-only");

  Result missing(kcw_context_derive(ctx, "objects", "Sparrow"));
  CHECK(missing.status() == KCW_ERR_INVALID_ARGUMENT);

  kcw_context* bad = nullptr;
  Result not_there(kcw_context_load("no-such-file.cxt", &bad));
  CHECK(not_there.status() == KCW_ERR_IO);
  CHECK(bad == nullptr);

  kcw_context_free(ctx);
}

TEST_CASE("kripke handles, enumeration budgets, fixtures") {
  kcw_kripke* kc = nullptr;
  Result loaded(kcw_kripke_load(data_file("example32.kripke.json").c_str(), &kc));
  REQUIRE(loaded.status() == KCW_OK);

  Result report(kcw_kripke_report(kc));
  CHECK(report.data()["symmetric_right"] == true);
  CHECK(report.data()["bisimulation"] == false);

  Result complex(kcw_kripke_complex(kc, "full", 0, 0));
  CHECK(complex.status() == KCW_OK);
  CHECK(complex.verdict() == KCW_PASS);
  CHECK(complex.data()["carrier"].size() == 8);
  kcw_kripke_free(kc);

  kcw_kripke* ds = nullptr;
  Result built(kcw_kripke_from_context(data_file("table1.cxt").c_str(), "E1E2", &ds));
  REQUIRE(built.status() == KCW_OK);
  Result space(kcw_approx_space(ds, "objects", "lower", "Leech,Bream,Dog"));
  CHECK(space.data()["result"] == json::array({"Leech", "Bream"}));
  kcw_kripke_free(ds);

  Result fixtures(kcw_fixtures_run("table1"));
  CHECK(fixtures.status() == KCW_OK);
  CHECK(fixtures.verdict() == KCW_PASS);
  Result unknown(kcw_fixtures_run("table9"));
  CHECK(unknown.status() == KCW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("algebra handles and checks") {
  kcw_algebra* alg = nullptr;
  Result loaded(kcw_algebra_load(data_file("boolean2.alg.json").c_str(), &alg));
  REQUIRE(loaded.status() == KCW_OK);
  Result check(kcw_dba_check(alg, "topological"));
  CHECK(check.verdict() == KCW_PASS);
  Result rep(kcw_dba_represent(alg));
  CHECK(rep.verdict() == KCW_PASS);
  CHECK(rep.data()["injective"] == true);
  kcw_algebra_free(alg);

  kcw_algebra* broken = nullptr;
  Result loaded2(kcw_algebra_load(data_file("broken.alg.json").c_str(), &broken));
  REQUIRE(loaded2.status() == KCW_OK);
  Result check2(kcw_dba_check(broken, "dba"));
  CHECK(check2.status() == KCW_OK);
  CHECK(check2.verdict() == KCW_FAIL);
  json report = check2.data();
  bool found_11a = false;
  for (const auto& axiom : report["axioms"])
    if (axiom["id"] == "11a" && axiom["pass"] == false) found_11a = true;
  CHECK(found_11a);
  kcw_algebra_free(broken);
}

TEST_CASE("logic over the C API") {
  Result parsed(kcw_logic_parse("p v q"));
  CHECK(parsed.data()["formula"] == "!(!p & !q)");

  Result proof(kcw_logic_check_proof(data_file("appendix_1a.proof.json").c_str(), ""));
  CHECK(proof.verdict() == KCW_PASS);
  Result bad_proof(kcw_logic_check_proof(data_file("bad.proof.json").c_str(), ""));
  CHECK(bad_proof.verdict() == KCW_FAIL);

  kcw_model* model = nullptr;
  Result loaded(kcw_model_load(data_file("table3.json").c_str(), &model));
  REQUIRE(loaded.status() == KCW_OK);
  Result eval(kcw_logic_eval(model, "!p", "{\"p\":{\"extent\":[\"c\",\"e\"],\"intent\":[\"a\"]}}"));
  CHECK(eval.data()["extent"] == json::array({"d"}));
  Result valid(kcw_logic_validate(model, "p & q |- p", 0));
  CHECK(valid.verdict() == KCW_PASS);
  kcw_model_free(model);

  Result search(kcw_logic_countermodel("top |- top & top", "cdbl", 1, 1, "all", 0));
  CHECK(search.status() == KCW_OK);
  CHECK(search.data()["found"] == true);

  Result budget(kcw_logic_countermodel("p & q |- p", "cdbl", 2, 2, "all", 3));
  CHECK(budget.status() == KCW_ERR_BUDGET_EXCEEDED);
}
