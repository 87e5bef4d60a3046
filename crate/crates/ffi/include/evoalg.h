#ifndef EVOALG_H
#define EVOALG_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

/**
 * Result codes. The nonzero input, precondition and invariant codes match
 * the exit codes of the command line tool.
 */
typedef enum EvoStatus {
  EVO_STATUS_OK = 0,
  EVO_STATUS_NULL_POINTER = 1,
  EVO_STATUS_INVALID_INPUT = 2,
  EVO_STATUS_PRECONDITION = 3,
  EVO_STATUS_INVARIANT = 4,
  EVO_STATUS_UTF8 = 5,
  EVO_STATUS_PANIC = 6,
} EvoStatus;

/**
 * How negative inheritance coefficients are treated when parsing.
 */
typedef enum EvoMode {
  /**
   * Use the mode named in the file, strict if absent.
   */
  EVO_MODE_FROM_FILE = 0,
  EVO_MODE_STRICT = 1,
  EVO_MODE_PERMISSIVE = 2,
} EvoMode;

/**
 * A parsed and validated problem.
 */
typedef struct EvoProblem EvoProblem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a problem from a JSON document. `mode` is an [`EvoMode`] value;
 * anything else is rejected with `InvalidInput`.
 *
 * # Safety
 * `json` must be a valid nul-terminated string and `out` a valid pointer.
 */
enum EvoStatus evo_problem_from_json(const char *json, int mode, struct EvoProblem **out);

/**
 * Releases a problem. Null is ignored.
 *
 * # Safety
 * `p` must come from [`evo_problem_from_json`] and not be used afterwards.
 */
void evo_problem_free(struct EvoProblem *p);

/**
 * Dimension of the algebra.
 *
 * # Safety
 * `p` must be a live handle and `dim` a valid pointer.
 */
enum EvoStatus evo_problem_dim(const struct EvoProblem *p, size_t *dim);

/**
 * Numbers of female and male types. `Precondition` for an algebra given
 * by structure constants.
 *
 * # Safety
 * `p` must be a live handle; `n` and `nu` valid pointers.
 */
enum EvoStatus evo_problem_types(const struct EvoProblem *p, size_t *n, size_t *nu);

/**
 * Full analysis report.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum EvoStatus evo_analyze(const struct EvoProblem *p, char **out);

/**
 * Invariant forms, annihilator and disappearing forms.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum EvoStatus evo_forms(const struct EvoProblem *p, char **out);

/**
 * Trajectory of a named state.
 *
 * # Safety
 * `p` must be a live handle, `state` a nul-terminated string and `out` a valid pointer.
 */
enum EvoStatus evo_simulate(const struct EvoProblem *p,
                            const char *state,
                            size_t steps,
                            bool decimal,
                            char **out);

/**
 * Classification of `(X, Y)` and the named pairs; `pair` may be null for all.
 *
 * # Safety
 * `p` must be a live handle, `pair` null or a nul-terminated string, `out` a valid pointer.
 */
enum EvoStatus evo_bq_classify(const struct EvoProblem *p, const char *pair, char **out);

/**
 * Homomorphism check of a named map.
 *
 * # Safety
 * `p` must be a live handle, `map` a nul-terminated string and `out` a valid pointer.
 */
enum EvoStatus evo_check_hom(const struct EvoProblem *p, const char *map, char **out);

/**
 * Classification of the quotient by a named ideal of codimension 2.
 *
 * # Safety
 * `p` must be a live handle, `ideal` a nul-terminated string and `out` a valid pointer.
 */
enum EvoStatus evo_classify_quotient(const struct EvoProblem *p, const char *ideal, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void evo_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *evo_last_error(void);

/**
 * Library version as a static string.
 */
const char *evo_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EVOALG_H */
