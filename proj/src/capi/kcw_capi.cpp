#include "kcw/kcw.h"

#include <memory>
#include <string>

#include "core/commands.hpp"
#include "core/io.hpp"

using kcw::Budgets;
using kcw::commands::Result;
using nlohmann::json;

struct kcw_result {
  Result res;
  std::string json_text;
};

struct kcw_context {
  kcw::Context ctx;
};

struct kcw_kripke {
  kcw::KripkeContext kc;
};

struct kcw_algebra {
  kcw::Dba alg;
};

struct kcw_model {
  kcw::commands::Model model;
};

namespace {

kcw_result* wrap(Result res) {
  auto* out = new kcw_result{std::move(res), {}};
  out->json_text = out->res.data.is_null() ? "{}" : out->res.data.dump(2);
  return out;
}

template <typename Fn>
kcw_result* run(Fn&& fn) {
  try {
    return wrap(fn());
  } catch (const kcw::Error& e) {
    Result res;
    res.status = e.code();
    res.error = e.what();
    return wrap(std::move(res));
  } catch (const std::exception& e) {
    Result res;
    res.status = kcw::ErrorCode::invalid_argument;
    res.error = e.what();
    return wrap(std::move(res));
  }
}

Budgets budget_with_truth(uint64_t truth) {
  Budgets b;
  if (truth) b.truth = truth;
  return b;
}

std::string or_empty(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

const char* kcw_version(void) { return "1.0.0"; }

int kcw_result_status(const kcw_result* res) { return static_cast<int>(res->res.status); }
int kcw_result_verdict(const kcw_result* res) { return res->res.verdict; }
const char* kcw_result_json(const kcw_result* res) { return res->json_text.c_str(); }
const char* kcw_result_text(const kcw_result* res) { return res->res.text.c_str(); }
const char* kcw_result_error(const kcw_result* res) { return res->res.error.c_str(); }
void kcw_result_free(kcw_result* res) { delete res; }

kcw_result* kcw_context_load(const char* path, kcw_context** out) {
  *out = nullptr;
  return run([&] {
    auto handle = std::make_unique<kcw_context>(kcw_context{kcw::io::load_context(or_empty(path))});
    Result res;
    res.data = kcw::io::context_to_json(handle->ctx);
    res.text = "loaded context " + std::to_string(handle->ctx.size_g()) + " x " +
               std::to_string(handle->ctx.size_m()) + "\n";
    *out = handle.release();
    return res;
  });
}

void kcw_context_free(kcw_context* ctx) { delete ctx; }

kcw_result* kcw_kripke_load(const char* path, kcw_kripke** out) {
  *out = nullptr;
  return run([&] {
    auto handle = std::make_unique<kcw_kripke>(kcw_kripke{kcw::io::load_kripke(or_empty(path))});
    Result res;
    res.data = kcw::io::kripke_to_json(handle->kc);
    res.text = "loaded Kripke context\n";
    *out = handle.release();
    return res;
  });
}

kcw_result* kcw_kripke_from_context(const char* context_path, const char* relations,
                                    kcw_kripke** out) {
  *out = nullptr;
  return run([&] {
    auto handle = std::make_unique<kcw_kripke>(
        kcw_kripke{kcw::commands::kripke_from_source(or_empty(context_path), or_empty(relations))});
    Result res;
    res.data = kcw::io::kripke_to_json(handle->kc);
    res.text = "loaded Kripke context\n";
    *out = handle.release();
    return res;
  });
}

void kcw_kripke_free(kcw_kripke* kc) { delete kc; }

kcw_result* kcw_algebra_load(const char* path, kcw_algebra** out) {
  *out = nullptr;
  return run([&] {
    auto handle = std::make_unique<kcw_algebra>(kcw_algebra{kcw::io::load_algebra(or_empty(path))});
    Result res;
    res.data = json{{"size", handle->alg.n}, {"operators", handle->alg.has_operators()}};
    res.text = "loaded algebra with " + std::to_string(handle->alg.n) + " elements\n";
    *out = handle.release();
    return res;
  });
}

void kcw_algebra_free(kcw_algebra* alg) { delete alg; }

kcw_result* kcw_model_load(const char* path, kcw_model** out) {
  *out = nullptr;
  return run([&] {
    auto handle = std::make_unique<kcw_model>(kcw_model{kcw::commands::load_model(or_empty(path))});
    Result res;
    res.data = json{{"kind", handle->model.alg ? "algebra" : handle->model.kc ? "kripke" : "context"}};
    res.text = "loaded model\n";
    *out = handle.release();
    return res;
  });
}

void kcw_model_free(kcw_model* model) { delete model; }

kcw_result* kcw_context_derive(const kcw_context* ctx, const char* side, const char* set_csv) {
  return wrap(kcw::commands::context_derive(ctx->ctx, or_empty(side), or_empty(set_csv)));
}

kcw_result* kcw_context_classify(const kcw_context* ctx, const char* extent_csv,
                                 const char* intent_csv) {
  return wrap(kcw::commands::context_classify(ctx->ctx, or_empty(extent_csv), or_empty(intent_csv)));
}

kcw_result* kcw_context_enumerate(const kcw_context* ctx, const char* kind, uint64_t enum_budget) {
  Budgets budgets;
  if (enum_budget) budgets.enumeration = enum_budget;
  return wrap(kcw::commands::context_enumerate(ctx->ctx, or_empty(kind), budgets));
}

kcw_result* kcw_approx_space(const kcw_kripke* kc, const char* side, const char* mode,
                             const char* set_csv) {
  return wrap(kcw::commands::approx_space(kc->kc, or_empty(side), or_empty(mode), or_empty(set_csv)));
}

kcw_result* kcw_approx_induced(const kcw_context* ctx, const char* kind) {
  return wrap(kcw::commands::approx_induced(ctx->ctx, or_empty(kind)));
}

kcw_result* kcw_approx_concept(const kcw_context* ctx, const char* side, const char* set_csv) {
  return wrap(kcw::commands::approx_concept(ctx->ctx, or_empty(side), or_empty(set_csv)));
}

kcw_result* kcw_approx_pair(const kcw_context* ctx, const char* extent_csv,
                            const char* intent_csv) {
  return wrap(kcw::commands::approx_pair(ctx->ctx, or_empty(extent_csv), or_empty(intent_csv)));
}

kcw_result* kcw_kripke_complex(const kcw_kripke* kc, const char* carrier, uint64_t enum_budget,
                               int algebra_budget) {
  Budgets budgets;
  if (enum_budget) budgets.enumeration = enum_budget;
  if (algebra_budget > 0) budgets.algebra_max = algebra_budget;
  return wrap(kcw::commands::kripke_complex(kc->kc, or_empty(carrier), budgets));
}

kcw_result* kcw_kripke_report(const kcw_kripke* kc) {
  return wrap(kcw::commands::kripke_report(kc->kc));
}

kcw_result* kcw_frame_bridge(const char* frame_path) {
  return run([&] {
    auto [n, rel] = kcw::io::load_frame(or_empty(frame_path));
    return kcw::commands::kripke_frame_bridge(n, rel, Budgets{});
  });
}

kcw_result* kcw_kripke_terms(const kcw_context* ctx, const char* extent_csv,
                             const char* intent_csv) {
  return wrap(kcw::commands::kripke_terms(ctx->ctx, or_empty(extent_csv), or_empty(intent_csv)));
}

kcw_result* kcw_dba_check(const kcw_algebra* alg, const char* level) {
  return wrap(kcw::commands::dba_check(alg->alg, or_empty(level)));
}

kcw_result* kcw_dba_parts(const kcw_algebra* alg) { return wrap(kcw::commands::dba_parts(alg->alg)); }

kcw_result* kcw_dba_filters(const kcw_algebra* alg, int filter_budget) {
  Budgets budgets;
  if (filter_budget > 0) budgets.filter_scan_max = filter_budget;
  return wrap(kcw::commands::dba_filters(alg->alg, budgets));
}

kcw_result* kcw_dba_standard_context(const kcw_algebra* alg) {
  return wrap(kcw::commands::dba_standard_context(alg->alg));
}

kcw_result* kcw_dba_represent(const kcw_algebra* alg) {
  return wrap(kcw::commands::dba_represent(alg->alg, Budgets{}));
}

kcw_result* kcw_dba_bridge(const char* input_path) {
  return wrap(kcw::commands::dba_bridge(or_empty(input_path)));
}

kcw_result* kcw_logic_parse(const char* text) {
  return wrap(kcw::commands::logic_parse(or_empty(text)));
}

kcw_result* kcw_logic_check_proof(const char* proof_path, const char* system) {
  return wrap(kcw::commands::logic_check_proof(or_empty(proof_path), or_empty(system)));
}

kcw_result* kcw_logic_eval(const kcw_model* model, const char* formula, const char* assigns_json) {
  return wrap(kcw::commands::logic_eval(model->model, or_empty(formula), or_empty(assigns_json)));
}

kcw_result* kcw_logic_validate(const kcw_model* model, const char* sequent, uint64_t truth_budget) {
  return wrap(kcw::commands::logic_validate(model->model, or_empty(sequent),
                                            budget_with_truth(truth_budget)));
}

kcw_result* kcw_logic_countermodel(const char* sequent, const char* system, int max_g, int max_m,
                                   const char* relation_mode, uint64_t truth_budget) {
  return wrap(kcw::commands::logic_countermodel(or_empty(sequent), or_empty(system), max_g, max_m,
                                                or_empty(relation_mode),
                                                budget_with_truth(truth_budget)));
}

kcw_result* kcw_fixtures_run(const char* name) {
  return wrap(kcw::commands::fixtures_run(or_empty(name)));
}

}  // extern "C"
