/* kcw - a workbench for formal contexts, Kripke contexts, double Boolean
 * algebras with operators, and the sequent calculi CDBL/MCDBL/MCDBL4.
 *
 * C API over the C++ core: opaque handles, integer status codes, and result
 * objects carrying both a JSON and a plain-text rendering of each report.
 */
#ifndef KCW_H
#define KCW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by kcw_result_status. */
enum {
  KCW_OK = 0,
  KCW_ERR_INVALID_ARGUMENT = 1,
  KCW_ERR_DIMENSION_MISMATCH = 2,
  KCW_ERR_CONTEXT_MISMATCH = 3,
  KCW_ERR_BUDGET_EXCEEDED = 4,
  KCW_ERR_PARSE = 5,
  KCW_ERR_IO = 6,
  KCW_ERR_MALFORMED_INPUT = 7,
  KCW_ERR_VERIFY_FAILED = 8,
  KCW_ERR_UNBOUND_VARIABLE = 9,
  KCW_ERR_UNSUPPORTED_MODEL = 10
};

/* Verdicts returned by kcw_result_verdict. */
enum { KCW_FAIL = 0, KCW_PASS = 1, KCW_NO_VERDICT = -1 };

typedef struct kcw_result kcw_result;   /* report of one operation */
typedef struct kcw_context kcw_context; /* formal context (G, M, I) */
typedef struct kcw_kripke kcw_kripke;   /* Kripke context ((G,R),(M,S),I) */
typedef struct kcw_algebra kcw_algebra; /* finite dBa / dBao tables */
typedef struct kcw_model kcw_model;     /* context, Kripke context or algebra */

const char* kcw_version(void);

/* Results are never NULL; inspect status before using the payload. */
int kcw_result_status(const kcw_result* res);
int kcw_result_verdict(const kcw_result* res);
const char* kcw_result_json(const kcw_result* res);
const char* kcw_result_text(const kcw_result* res);
const char* kcw_result_error(const kcw_result* res);
void kcw_result_free(kcw_result* res);

/* Loading. On success (*out) owns the handle; free with the matching call.
 * The returned result reports status and, on failure, the error message. */
kcw_result* kcw_context_load(const char* path, kcw_context** out);
void kcw_context_free(kcw_context* ctx);
kcw_result* kcw_kripke_load(const char* path, kcw_kripke** out);
/* relations: "identity" or "E1E2"; builds the Kripke context from a plain
 * context file. */
kcw_result* kcw_kripke_from_context(const char* context_path, const char* relations,
                                    kcw_kripke** out);
void kcw_kripke_free(kcw_kripke* kc);
kcw_result* kcw_algebra_load(const char* path, kcw_algebra** out);
void kcw_algebra_free(kcw_algebra* alg);
kcw_result* kcw_model_load(const char* path, kcw_model** out);
void kcw_model_free(kcw_model* model);

/* Formal contexts. Sets are comma-separated name lists; "-" is the empty
 * set. side: "objects" | "attributes". */
kcw_result* kcw_context_derive(const kcw_context* ctx, const char* side, const char* set_csv);
kcw_result* kcw_context_classify(const kcw_context* ctx, const char* extent_csv,
                                 const char* intent_csv);
/* kind: "protoconcepts" | "semiconcepts" | "concepts"; enum_budget 0 keeps
 * the default (2^24 candidate pairs). */
kcw_result* kcw_context_enumerate(const kcw_context* ctx, const char* kind, uint64_t enum_budget);

/* Rough approximation. mode: "lower" | "upper"; kind: E1 E2 J1 J2. */
kcw_result* kcw_approx_space(const kcw_kripke* kc, const char* side, const char* mode,
                             const char* set_csv);
kcw_result* kcw_approx_induced(const kcw_context* ctx, const char* kind);
kcw_result* kcw_approx_concept(const kcw_context* ctx, const char* side, const char* set_csv);
kcw_result* kcw_approx_pair(const kcw_context* ctx, const char* extent_csv,
                            const char* intent_csv);

/* Kripke contexts. carrier: "full" | "semiconcept". */
kcw_result* kcw_kripke_complex(const kcw_kripke* kc, const char* carrier, uint64_t enum_budget,
                               int algebra_budget);
kcw_result* kcw_kripke_report(const kcw_kripke* kc);
kcw_result* kcw_frame_bridge(const char* frame_path);
kcw_result* kcw_kripke_terms(const kcw_context* ctx, const char* extent_csv,
                             const char* intent_csv);

/* Finite algebras. level: dba | contextual | pure | dbao | topological. */
kcw_result* kcw_dba_check(const kcw_algebra* alg, const char* level);
kcw_result* kcw_dba_parts(const kcw_algebra* alg);
kcw_result* kcw_dba_filters(const kcw_algebra* alg, int filter_budget);
kcw_result* kcw_dba_standard_context(const kcw_algebra* alg);
kcw_result* kcw_dba_represent(const kcw_algebra* alg);
kcw_result* kcw_dba_bridge(const char* input_path);

/* Logic. system: "cdbl" | "mcdbl" | "mcdbl4" (check-proof also accepts ""
 * to honour the proof file). assigns_json maps variables either to carrier
 * indices or to {"extent": [...], "intent": [...]} objects. */
kcw_result* kcw_logic_parse(const char* text);
kcw_result* kcw_logic_check_proof(const char* proof_path, const char* system);
kcw_result* kcw_logic_eval(const kcw_model* model, const char* formula, const char* assigns_json);
kcw_result* kcw_logic_validate(const kcw_model* model, const char* sequent, uint64_t truth_budget);
/* relation_mode: "all" | "reflexive-transitive". */
kcw_result* kcw_logic_countermodel(const char* sequent, const char* system, int max_g, int max_m,
                                   const char* relation_mode, uint64_t truth_budget);

/* Built-in worked-example audits; name NULL or "" runs everything. */
kcw_result* kcw_fixtures_run(const char* name);

#ifdef __cplusplus
}
#endif

#endif /* KCW_H */
