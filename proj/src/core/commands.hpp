#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "context.hpp"
#include "dba.hpp"
#include "error.hpp"
#include "kripke.hpp"

namespace kcw::commands {

using nlohmann::json;

// What one subcommand invocation produced. status != ok means the operation
// could not run (bad input, budget); verdict carries check outcomes.
struct Result {
  ErrorCode status = ErrorCode::ok;
  int verdict = -1;  // 1 pass, 0 fail/counterexample, -1 not a check
  json data;
  std::string text;
  std::string error;
};

// A loaded model file for the logic commands: exactly one member is set.
struct Model {
  std::unique_ptr<Context> ctx;
  std::unique_ptr<KripkeContext> kc;
  std::unique_ptr<Dba> alg;
};

Result context_derive(const Context& ctx, const std::string& side, const std::string& set_csv);
Result context_classify(const Context& ctx, const std::string& extent_csv,
                        const std::string& intent_csv);
Result context_enumerate(const Context& ctx, const std::string& kind, const Budgets& budgets);

Result approx_space(const KripkeContext& kc, const std::string& side, const std::string& mode,
                    const std::string& set_csv);
Result approx_induced(const Context& ctx, const std::string& kind);
Result approx_concept(const Context& ctx, const std::string& side, const std::string& set_csv);
Result approx_pair(const Context& ctx, const std::string& extent_csv,
                   const std::string& intent_csv);

Result kripke_complex(const KripkeContext& kc, const std::string& carrier, const Budgets& budgets);
Result kripke_report(const KripkeContext& kc);
Result kripke_frame_bridge(int n, const std::vector<Mask>& rel, const Budgets& budgets);
Result kripke_terms(const Context& ctx, const std::string& extent_csv,
                    const std::string& intent_csv);

Result dba_check(const Dba& alg, const std::string& level);
Result dba_parts(const Dba& alg);
Result dba_filters(const Dba& alg, const Budgets& budgets);
Result dba_standard_context(const Dba& alg);
Result dba_represent(const Dba& alg, const Budgets& budgets);
Result dba_bridge(const std::string& path);

Result logic_parse(const std::string& text);
Result logic_check_proof(const std::string& path, const std::string& system);
Result logic_eval(const Model& model, const std::string& formula, const std::string& assigns_json);
Result logic_validate(const Model& model, const std::string& sequent, const Budgets& budgets);
Result logic_countermodel(const std::string& sequent, const std::string& system, int max_g,
                          int max_m, const std::string& relation_mode, const Budgets& budgets);

Result fixtures_run(const std::string& name);  // empty name runs everything

Model load_model(const std::string& path);
KripkeContext kripke_from_source(const std::string& path, const std::string& relations);

// Wraps a command body, turning thrown kcw::Error into a Result.
template <typename Fn>
Result guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    Result res;
    res.status = e.code();
    res.error = e.what();
    return res;
  } catch (const std::exception& e) {
    Result res;
    res.status = ErrorCode::invalid_argument;
    res.error = e.what();
    return res;
  }
}

}  // namespace kcw::commands
