/*
 * C API for the asl2 exact representation toolkit.
 *
 * Every entry point builds a report behind an opaque handle and returns a
 * status code; on failure the handle is left untouched and a thread-local
 * message is available from asl2_last_error(). Reports render either as
 * JSON ({"command", "params", "results", "pass"}) or as plain text, and
 * asl2_report_pass() tells whether every check inside passed.
 *
 * Scalars are exact rationals or Gaussian rationals written "p", "p/q",
 * "re+im i" (e.g. "7/3", "-1/2", "2+i", "0+1i"). Windows are written "a:b".
 * NULL window/margin<0 pick the documented defaults.
 */

#ifndef ASL2_H
#define ASL2_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct asl2_report_s asl2_report;

typedef enum asl2_status_e {
  ASL2_OK = 0,
  ASL2_ERROR_INVALID_ARGUMENT = 1, /* bad parameters, window/margin conflicts */
  ASL2_ERROR_PARSE = 2,            /* malformed scalar, window or JSON input */
  ASL2_ERROR_DOMAIN = 3,           /* mathematically undefined request */
  ASL2_ERROR_INTERNAL = 4
} asl2_status;

const char* asl2_version(void);

/* Thread-local message describing the most recent failure. */
const char* asl2_last_error(void);

/* Records a seed echoed into the params of subsequent reports on this
 * thread. Every built-in check is exhaustive and deterministic, so the seed
 * never alters results; it exists to make report provenance explicit. */
void asl2_set_seed(long seed);
void asl2_clear_seed(void);

/* Axioms of the built-in three-dimensional algebra, or of structure
 * constants supplied as JSON text (pass NULL for the builtin). */
asl2_status asl2_axioms(const char* structure_json, int complex_mode,
                        asl2_report** out);

/* Full identity run (grading alignment, defining relations, the twelve
 * even-generator relations, Casimir identities, reducibility scan) on the
 * chain module of the given weight. force_generic builds the doubly
 * truncated chain even at odd integer weights. */
asl2_status asl2_rep_check(const char* weight, const char* window, int margin,
                           int force_generic, asl2_report** out);

/* Casimir identities only. */
asl2_status asl2_casimir_check(const char* weight, const char* window,
                               int margin, asl2_report** out);

/* Text chain diagram plus the weight table. */
asl2_status asl2_weights(const char* weight, const char* window,
                         int force_generic, asl2_report** out);

/* Canonical class of a weight. */
asl2_status asl2_classify(const char* weight, asl2_report** out);

/* Equivariant chain map between two weights, or the obstruction. */
asl2_status asl2_isomorphism(const char* weight_from, const char* weight_to,
                             const char* window_from, asl2_report** out);

/* Exhaustive solution scan of floor((N-i)/2)+floor((M-i)/2)+i = rhs. */
asl2_status asl2_nogo(long max_nm, long rhs, asl2_report** out);

/* Identity run for the differential-operator realization; optionally
 * matches the module generated from x^lambda xi against a chain window. */
asl2_status asl2_geom_check(const char* lambda, long degree_window,
                            int intertwine, const char* chain_window,
                            asl2_report** out);

/* Deformed relation system on the tensor product of two chain modules. */
asl2_status asl2_tensor_check(const char* weight_left,
                              const char* weight_right,
                              const char* window_left,
                              const char* window_right, int margin,
                              int dump_residual, asl2_report** out);

/* 1 when every check in the report passed. */
int asl2_report_pass(const asl2_report* r);

/* Owned by the report; valid until asl2_report_free. */
const char* asl2_report_json(asl2_report* r);
const char* asl2_report_text(asl2_report* r);

void asl2_report_free(asl2_report* r);

#ifdef __cplusplus
}
#endif

#endif /* ASL2_H */
