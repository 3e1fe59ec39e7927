#ifndef PAULI_CONSTRAINTS_H
#define PAULI_CONSTRAINTS_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_ARGUMENT = 2,
  PC_STATUS_BUFFER_TOO_SMALL = 3,
  PC_STATUS_RESOURCE_CAP = 4,
  PC_STATUS_PANIC = 5,
} PcStatus;

/**
 * A generated inequality family.
 */
typedef struct PcFamily PcFamily;

/**
 * A Schubert or other integer polynomial.
 */
typedef struct PcPoly PcPoly;

/**
 * The result of the polytope pipeline.
 */
typedef struct PcReport PcReport;

/**
 * A fermionic state in `∧^N H_r`.
 */
typedef struct PcState PcState;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Owned by the
 * library and valid until the next call on this thread.
 */
const char *pc_last_error(void);

void pc_string_free(char *s);

/**
 * Schubert polynomial of a permutation given as zero-based digits
 * (`"1032"`), one-based one-line (`"2,1,4,3"`) or cycles (`"(1 2)(3 4)"`).
 */
enum PcStatus pc_schubert(const char *w, struct PcPoly **out);

/**
 * Human-readable form in `x, y, z, …`.
 */
enum PcStatus pc_poly_to_string(const struct PcPoly *poly, char **out);

void pc_poly_free(struct PcPoly *poly);

/**
 * `c_w^v(a)` for the spectrum `a` (length `r`) and shape `nu`, written as a
 * decimal string.
 */
enum PcStatus pc_coefficient(const int64_t *a,
                             uintptr_t r,
                             const uint32_t *nu,
                             uintptr_t nu_len,
                             const char *v,
                             const char *w,
                             char **out);

/**
 * Parse a state such as `"2[123]+√10[145]"` over `r` orbitals.
 */
enum PcStatus pc_state_parse(const char *expr, uintptr_t r, struct PcState **out);

/**
 * Number of orbitals `r`.
 */
enum PcStatus pc_state_rank(const struct PcState *state, uintptr_t *out);

/**
 * Occupation numbers in non-increasing order, written to `buf[0..r]`.
 */
enum PcStatus pc_state_occupations(const struct PcState *state, double *buf, uintptr_t len);

void pc_state_free(struct PcState *state);

/**
 * First-kind family for `∧^N H_r`.
 */
enum PcStatus pc_grassmann_kind1(uintptr_t n, uintptr_t r, struct PcFamily **out);

/**
 * Second-kind family at level `p`.
 */
enum PcStatus pc_grassmann_kind2(uintptr_t n, uintptr_t p, struct PcFamily **out);

enum PcStatus pc_family_len(const struct PcFamily *family, uintptr_t *out);

/**
 * Item `index` as `Σ_{indices} λ_i ≤ bound`. `indices` receives up to
 * `cap` entries; `count` always receives the full length.
 */
enum PcStatus pc_family_item(const struct PcFamily *family,
                             uintptr_t index,
                             uint32_t *indices,
                             uintptr_t cap,
                             uintptr_t *count,
                             int64_t *bound);

/**
 * The whole family, including exclusions and certificates, as JSON.
 */
enum PcStatus pc_family_to_json(const struct PcFamily *family, char **out);

void pc_family_free(struct PcFamily *family);

/**
 * Run the moment-polytope pipeline for `(nu, r, rank_bound)` over the given
 * schedule of `|μ|` bounds.
 */
enum PcStatus pc_pipeline(const uint32_t *nu,
                          uintptr_t nu_len,
                          uintptr_t r,
                          uintptr_t rank_bound,
                          const uint32_t *schedule,
                          uintptr_t schedule_len,
                          struct PcReport **out);

/**
 * `|μ|` at which the pipeline converged, or 0 if it did not.
 */
enum PcStatus pc_report_converged_at(const struct PcReport *report, uintptr_t *out);

enum PcStatus pc_report_to_json(const struct PcReport *report, char **out);

void pc_report_free(struct PcReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PAULI_CONSTRAINTS_H */
