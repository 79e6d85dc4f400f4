// kcw command-line front end. Talks to the core exclusively through the C
// API in kcw/kcw.h; all heavy lifting lives behind the shared library.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcw/kcw.h"

namespace {

struct Options {
  bool json = false;
  std::uint64_t enum_budget = 0;   // 0 = library default
  std::uint64_t truth_budget = 0;
  int filter_budget = 0;
  int algebra_budget = 0;
};

std::uint64_t env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return 0;
  return std::strtoull(v, nullptr, 10);
}

void apply_env(Options& opt) {
  if (!opt.enum_budget) opt.enum_budget = env_u64("KCW_ENUM_BUDGET");
  if (!opt.truth_budget) opt.truth_budget = env_u64("KCW_TRUTH_BUDGET");
  if (!opt.filter_budget) opt.filter_budget = static_cast<int>(env_u64("KCW_FILTER_BUDGET"));
  if (!opt.algebra_budget) opt.algebra_budget = static_cast<int>(env_u64("KCW_ALGEBRA_BUDGET"));
}

using ResultPtr = std::unique_ptr<kcw_result, decltype(&kcw_result_free)>;

ResultPtr own(kcw_result* res) { return ResultPtr(res, kcw_result_free); }

int finish(const Options& opt, const ResultPtr& res) {
  if (kcw_result_status(res.get()) != KCW_OK) {
    std::cerr << "error: " << kcw_result_error(res.get()) << "\n";
    return 2;
  }
  std::cout << (opt.json ? kcw_result_json(res.get()) : kcw_result_text(res.get()));
  if (opt.json) std::cout << "\n";
  return kcw_result_verdict(res.get()) == KCW_FAIL ? 1 : 0;
}

struct ContextHandle {
  kcw_context* ctx = nullptr;
  ~ContextHandle() { kcw_context_free(ctx); }
};

struct KripkeHandle {
  kcw_kripke* kc = nullptr;
  ~KripkeHandle() { kcw_kripke_free(kc); }
};

struct AlgebraHandle {
  kcw_algebra* alg = nullptr;
  ~AlgebraHandle() { kcw_algebra_free(alg); }
};

struct ModelHandle {
  kcw_model* model = nullptr;
  ~ModelHandle() { kcw_model_free(model); }
};

int load_or_fail(const ResultPtr& res) {
  if (kcw_result_status(res.get()) != KCW_OK) {
    std::cerr << "error: " << kcw_result_error(res.get()) << "\n";
    return 2;
  }
  return 0;
}

// --assign p=c,e/a or p=3 (algebra models); '-' denotes the empty side.
std::string assigns_to_json(const std::vector<std::string>& assigns) {
  std::string out = "{";
  bool first = true;
  auto quote_list = [](const std::string& csv) {
    std::string body;
    if (csv != "-" && !csv.empty()) {
      size_t start = 0;
      bool first_name = true;
      while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string name = csv.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!first_name) body += ",";
        body += "\"" + name + "\"";
        first_name = false;
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    return "[" + body + "]";
  };
  for (const std::string& a : assigns) {
    size_t eq = a.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--assign expects var=value");
    std::string var = a.substr(0, eq);
    std::string value = a.substr(eq + 1);
    if (!first) out += ",";
    first = false;
    size_t slash = value.find('/');
    if (slash == std::string::npos) {
      out += "\"" + var + "\":" + value;  // carrier index
    } else {
      out += "\"" + var + "\":{\"extent\":" + quote_list(value.substr(0, slash)) +
             ",\"intent\":" + quote_list(value.substr(slash + 1)) + "}";
    }
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for formal contexts, Kripke contexts, double Boolean algebras and the"
               " CDBL family of sequent calculi"};
  app.require_subcommand(1);
  Options opt;
  std::string output = "text";
  app.add_option("--output", output, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--enum-budget", opt.enum_budget, "cap on 2^|G| * 2^|M| during enumeration");
  app.add_option("--val-budget", opt.truth_budget, "cap on valuations during truth checks");
  app.add_option("--filter-budget", opt.filter_budget, "carrier cap for the full filter scan");
  app.add_option("--algebra-budget", opt.algebra_budget, "carrier cap for operation tables");

  // context
  auto* context = app.add_subcommand("context", "formal contexts and protoconcepts");
  std::string ctx_file, side = "objects", set_csv, extent_csv, intent_csv, kind = "protoconcepts";
  auto* derive = context->add_subcommand("derive", "apply the derivation operator");
  derive->add_option("file", ctx_file)->required();
  derive->add_option("--side", side, "objects or attributes");
  derive->add_option("--set", set_csv, "comma-separated names ('-' for the empty set)")->required();
  auto* classify = context->add_subcommand("classify", "concept / semiconcept / protoconcept");
  classify->add_option("file", ctx_file)->required();
  classify->add_option("--extent", extent_csv)->required();
  classify->add_option("--intent", intent_csv)->required();
  auto* enumerate = context->add_subcommand("enumerate", "list protoconcepts");
  enumerate->add_option("file", ctx_file)->required();
  enumerate->add_option("--kind", kind, "protoconcepts, semiconcepts or concepts");

  // approx
  auto* approx = app.add_subcommand("approx", "rough approximation operators");
  std::string mode = "lower", induced_kind = "E1";
  auto* space = approx->add_subcommand("space", "lower/upper approximation in a Kripke context");
  space->add_option("file", ctx_file)->required();
  space->add_option("--side", side, "objects or attributes");
  space->add_option("--mode", mode, "lower or upper")->required();
  space->add_option("--set", set_csv)->required();
  auto* induced = approx->add_subcommand("induced", "indiscernibility relations from a context");
  induced->add_option("file", ctx_file)->required();
  induced->add_option("--kind", induced_kind, "E1, E2, J1 or J2");
  auto* concept_cmd = approx->add_subcommand("concept", "concept approximations of a set");
  concept_cmd->add_option("file", ctx_file)->required();
  concept_cmd->add_option("--side", side, "objects or attributes");
  concept_cmd->add_option("--set", set_csv)->required();
  auto* pair = approx->add_subcommand("pair", "approximations of an arbitrary pair");
  pair->add_option("file", ctx_file)->required();
  pair->add_option("--extent", extent_csv)->required();
  pair->add_option("--intent", intent_csv)->required();

  // kripke
  auto* kripke = app.add_subcommand("kripke", "Kripke contexts and complex algebras");
  std::string relations, carrier = "full", frame_file;
  auto* complex = kripke->add_subcommand("complex", "materialise the complex algebra");
  complex->add_option("file", ctx_file)->required();
  complex->add_option("--relations", relations, "identity or E1E2 (treat the file as a context)");
  complex->add_option("--carrier", carrier, "full or semiconcept");
  auto* report = kripke->add_subcommand("report", "reflexivity/symmetry/transitivity/bisimulation");
  report->add_option("file", ctx_file)->required();
  report->add_option("--relations", relations);
  auto* bridge = kripke->add_subcommand("frame-bridge", "Kripke frame to Kripke context bridge");
  bridge->add_option("file", frame_file)->required();
  auto* terms = kripke->add_subcommand("terms", "concept approximations via modal terms");
  terms->add_option("file", ctx_file)->required();
  terms->add_option("--extent", extent_csv)->required();
  terms->add_option("--intent", intent_csv)->required();

  // dba
  auto* dba = app.add_subcommand("dba", "finite double Boolean algebras");
  std::string alg_file, level = "dba", bridge_file;
  auto* check = dba->add_subcommand("check", "axiom check at a level");
  check->add_option("file", alg_file)->required();
  check->add_option("--level", level, "dba, contextual, pure, dbao or topological");
  auto* parts = dba->add_subcommand("parts", "idempotent parts and Boolean extracts");
  parts->add_option("file", alg_file)->required();
  auto* filters = dba->add_subcommand("filters", "filters, ideals, primary classification");
  filters->add_option("file", alg_file)->required();
  auto* standard = dba->add_subcommand("standard-context", "standard context of the algebra");
  standard->add_option("file", alg_file)->required();
  auto* represent = dba->add_subcommand("represent", "canonical Kripke context and embedding");
  represent->add_option("file", alg_file)->required();
  auto* dbridge = dba->add_subcommand("bridge", "Bao to dBao and part-operator constructions");
  dbridge->add_option("file", bridge_file)->required();

  // logic
  auto* logic = app.add_subcommand("logic", "CDBL / MCDBL / MCDBL4");
  std::string text_arg, system = "cdbl", sequent, model_file, relation_mode = "all";
  std::vector<std::string> assigns;
  int max_g = 2, max_m = 2;
  auto* parse = logic->add_subcommand("parse", "parse and canonically print");
  parse->add_option("text", text_arg)->required();
  auto* check_proof = logic->add_subcommand("check-proof", "check a derivation file");
  check_proof->add_option("file", model_file)->required();
  check_proof->add_option("--system", system, "cdbl, mcdbl or mcdbl4 (overrides the file)");
  auto* eval = logic->add_subcommand("eval", "evaluate a formula in a model");
  eval->add_option("file", model_file, "context, Kripke context or algebra file")->required();
  eval->add_option("formula", text_arg)->required();
  eval->add_option("--assign", assigns, "var=extent/intent names, or var=index for algebras");
  auto* validate = logic->add_subcommand("validate", "check a sequent over all valuations");
  validate->add_option("file", model_file)->required();
  validate->add_option("sequent", sequent)->required();
  auto* counter = logic->add_subcommand("countermodel", "search contexts for a falsifying model");
  counter->add_option("sequent", sequent)->required();
  counter->add_option("--system", system, "cdbl, mcdbl or mcdbl4");
  counter->add_option("--max-g", max_g, "largest object count");
  counter->add_option("--max-m", max_m, "largest attribute count");
  counter->add_option("--relation-mode", relation_mode, "all or reflexive-transitive");

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "built-in worked examples");
  std::string fixture_name;
  auto* fixtures_run = fixtures->add_subcommand("run", "reproduce the worked examples");
  fixtures_run->add_option("name", fixture_name, "table1, table2, table3, thm-3-4, thm-4-9,"
                                                 " thm-4-15, appendix, prop-5-1, thm-5-2");

  CLI11_PARSE(app, argc, argv);
  opt.json = output == "json";
  apply_env(opt);

  if (derive->parsed() || classify->parsed() || enumerate->parsed() || induced->parsed() ||
      concept_cmd->parsed() || pair->parsed() || terms->parsed()) {
    ContextHandle handle;
    if (int rc = load_or_fail(own(kcw_context_load(ctx_file.c_str(), &handle.ctx)))) return rc;
    if (derive->parsed())
      return finish(opt, own(kcw_context_derive(handle.ctx, side.c_str(), set_csv.c_str())));
    if (classify->parsed())
      return finish(opt,
                    own(kcw_context_classify(handle.ctx, extent_csv.c_str(), intent_csv.c_str())));
    if (enumerate->parsed())
      return finish(opt, own(kcw_context_enumerate(handle.ctx, kind.c_str(), opt.enum_budget)));
    if (induced->parsed())
      return finish(opt, own(kcw_approx_induced(handle.ctx, induced_kind.c_str())));
    if (concept_cmd->parsed())
      return finish(opt, own(kcw_approx_concept(handle.ctx, side.c_str(), set_csv.c_str())));
    if (pair->parsed())
      return finish(opt, own(kcw_approx_pair(handle.ctx, extent_csv.c_str(), intent_csv.c_str())));
    return finish(opt, own(kcw_kripke_terms(handle.ctx, extent_csv.c_str(), intent_csv.c_str())));
  }

  if (space->parsed() || complex->parsed() || report->parsed()) {
    KripkeHandle handle;
    kcw_result* loaded = relations.empty()
                             ? kcw_kripke_load(ctx_file.c_str(), &handle.kc)
                             : kcw_kripke_from_context(ctx_file.c_str(), relations.c_str(), &handle.kc);
    if (int rc = load_or_fail(own(loaded))) return rc;
    if (space->parsed())
      return finish(opt,
                    own(kcw_approx_space(handle.kc, side.c_str(), mode.c_str(), set_csv.c_str())));
    if (complex->parsed())
      return finish(opt, own(kcw_kripke_complex(handle.kc, carrier.c_str(), opt.enum_budget, opt.algebra_budget)));
    return finish(opt, own(kcw_kripke_report(handle.kc)));
  }

  if (bridge->parsed()) return finish(opt, own(kcw_frame_bridge(frame_file.c_str())));

  if (check->parsed() || parts->parsed() || filters->parsed() || standard->parsed() ||
      represent->parsed()) {
    AlgebraHandle handle;
    if (int rc = load_or_fail(own(kcw_algebra_load(alg_file.c_str(), &handle.alg)))) return rc;
    if (check->parsed()) return finish(opt, own(kcw_dba_check(handle.alg, level.c_str())));
    if (parts->parsed()) return finish(opt, own(kcw_dba_parts(handle.alg)));
    if (filters->parsed())
      return finish(opt, own(kcw_dba_filters(handle.alg, opt.filter_budget)));
    if (standard->parsed()) return finish(opt, own(kcw_dba_standard_context(handle.alg)));
    return finish(opt, own(kcw_dba_represent(handle.alg)));
  }
  if (dbridge->parsed()) return finish(opt, own(kcw_dba_bridge(bridge_file.c_str())));

  if (parse->parsed()) return finish(opt, own(kcw_logic_parse(text_arg.c_str())));
  if (check_proof->parsed()) {
    const char* sys = check_proof->count("--system") ? system.c_str() : "";
    return finish(opt, own(kcw_logic_check_proof(model_file.c_str(), sys)));
  }
  if (eval->parsed() || validate->parsed()) {
    ModelHandle handle;
    if (int rc = load_or_fail(own(kcw_model_load(model_file.c_str(), &handle.model)))) return rc;
    if (eval->parsed()) {
      std::string assigns_json;
      try {
        assigns_json = assigns_to_json(assigns);
      } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      return finish(opt,
                    own(kcw_logic_eval(handle.model, text_arg.c_str(), assigns_json.c_str())));
    }
    return finish(opt, own(kcw_logic_validate(handle.model, sequent.c_str(), opt.truth_budget)));
  }
  if (counter->parsed())
    return finish(opt, own(kcw_logic_countermodel(sequent.c_str(), system.c_str(), max_g, max_m,
                                                  relation_mode.c_str(), opt.truth_budget)));

  if (fixtures_run->parsed())
    return finish(opt, own(kcw_fixtures_run(fixture_name.c_str())));

  std::cerr << "error: no subcommand\n";
  return 2;
}
