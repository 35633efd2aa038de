#ifndef PMOD_H
#define PMOD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Sampling class for `pmod_random_module`.
enum PmodClass {
  PMOD_CLASS_M = 0,
  PMOD_CLASS_N = 1,
};

// Result of every fallible call. `PMOD_STATUS_OK` is zero; the others mirror
// the library error codes, followed by ABI-level failures.
enum PmodStatus {
  PMOD_STATUS_OK = 0,
  PMOD_STATUS_SHAPE_MISMATCH = 1,
  PMOD_STATUS_NON_FINITE = 2,
  PMOD_STATUS_NOT_HERMITIAN = 3,
  PMOD_STATUS_NOT_POSITIVE = 4,
  PMOD_STATUS_NO_CONVERGENCE = 5,
  PMOD_STATUS_SINGULAR_OPERAND = 6,
  PMOD_STATUS_SINGULAR_DENOMINATOR = 7,
  PMOD_STATUS_KERNEL_OVERLAP = 8,
  PMOD_STATUS_NOT_INVERTIBLE = 9,
  PMOD_STATUS_NOT_INTERTWINER = 10,
  PMOD_STATUS_ON_UNIT_AXIS = 11,
  PMOD_STATUS_ARITY_UNSUPPORTED = 12,
  PMOD_STATUS_NOT_FULL_SUSPECTED = 13,
  PMOD_STATUS_NOT_PRIME = 14,
  PMOD_STATUS_NOT_D2_SHAPE = 15,
  PMOD_STATUS_PARSE_ERROR = 16,
  PMOD_STATUS_SHAPE_ERROR = 17,
  PMOD_STATUS_PYTHAGOREAN_VIOLATION = 18,
  PMOD_STATUS_INVALID_ARGUMENT = 19,
  PMOD_STATUS_NULL_POINTER = 100,
  PMOD_STATUS_INVALID_UTF8 = 101,
  PMOD_STATUS_BUFFER_TOO_SMALL = 102,
  PMOD_STATUS_PANIC = 103,
};

// Outcome of `pmod_equivalent`.
enum PmodVerdict {
  PMOD_VERDICT_FALSE = 0,
  PMOD_VERDICT_TRUE = 1,
  PMOD_VERDICT_UNDECIDED = 2,
};

// Opaque module handle. Release with `pmod_module_free`.
struct PmodModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *pmod_last_error_message(void);

// Builds a module from `2 * arity * dim * dim` doubles and checks
// `Σ L_k^* L_k = I` to `tol`.
//
// # Safety
// `data` must point to that many readable doubles and `out` must be writable.
enum PmodStatus pmod_module_new(uintptr_t arity,
                                uintptr_t dim,
                                const double *data,
                                double tol,
                                struct PmodModule **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `m` must come from this library and not be freed twice.
void pmod_module_free(struct PmodModule *m);

// Dimension of the module, or 0 for a null handle.
//
// # Safety
// `m` must be null or a live handle.
uintptr_t pmod_module_dim(const struct PmodModule *m);

// Number of legs, or 0 for a null handle.
//
// # Safety
// `m` must be null or a live handle.
uintptr_t pmod_module_arity(const struct PmodModule *m);

// `‖Σ L_k^* L_k − I‖_F`, or NaN for a null handle.
//
// # Safety
// `m` must be null or a live handle.
double pmod_module_residual(const struct PmodModule *m);

// Copies leg `k` into `out` as `2 * dim * dim` doubles.
//
// # Safety
// `m` must be a live handle and `out` must hold `len` writable doubles.
enum PmodStatus pmod_module_leg(const struct PmodModule *m,
                                uintptr_t k,
                                double *out,
                                uintptr_t len);

// Fusion product `m ⊠ mt`.
//
// # Safety
// `m` and `mt` must be live handles and `out` writable.
enum PmodStatus pmod_boxtimes(const struct PmodModule *m,
                              const struct PmodModule *mt,
                              double rtol,
                              struct PmodModule **out);

// Direct sum `m ⊕ mt`.
//
// # Safety
// `m` and `mt` must be live handles and `out` writable.
enum PmodStatus pmod_direct_sum(const struct PmodModule *m,
                                const struct PmodModule *mt,
                                struct PmodModule **out);

// Kawamura product, of arity four.
//
// # Safety
// `m` and `mt` must be live handles and `out` writable.
enum PmodStatus pmod_kawamura(const struct PmodModule *m,
                              const struct PmodModule *mt,
                              struct PmodModule **out);

// Dual module; both legs must be invertible.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum PmodStatus pmod_dual(const struct PmodModule *m, double rtol, struct PmodModule **out);

// Unitary equivalence test. `witness`, when not null, receives `2 * dim^2`
// doubles of the intertwining unitary if the verdict is true and
// `witness_len` is large enough.
//
// # Safety
// `m` and `mt` must be live handles, `verdict` writable, and `witness` null
// or `witness_len` writable doubles.
enum PmodStatus pmod_equivalent(const struct PmodModule *m,
                                const struct PmodModule *mt,
                                double rtol,
                                uint64_t seed,
                                enum PmodVerdict *verdict,
                                double *witness,
                                uintptr_t witness_len);

// Atomic module for a binary prime word such as `"011"` and a unit phase.
//
// # Safety
// `word` must be a NUL-terminated string and `out` writable.
enum PmodStatus pmod_atomic_module(const char *word,
                                   double phase_re,
                                   double phase_im,
                                   struct PmodModule **out);

// GP module of a vector of `len` scalar modules, given as `4 * len` doubles
// `a.re, a.im, b.re, b.im`.
//
// # Safety
// `pairs` must point to `4 * len` readable doubles and `out` be writable.
enum PmodStatus pmod_gp_module(const double *pairs, uintptr_t len, struct PmodModule **out);

// Seeded sample from class `M` or `N`.
//
// # Safety
// `out` must be writable.
enum PmodStatus pmod_random_module(uintptr_t dim,
                                   enum PmodClass class_,
                                   uint64_t seed,
                                   uintptr_t zero_eigs,
                                   struct PmodModule **out);

// Parses a JSON module file and checks it to `tol`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum PmodStatus pmod_module_from_json(const char *json, double tol, struct PmodModule **out);

// JSON module file text. Release with `pmod_string_free`.
//
// # Safety
// `m` must be a live handle and `out` writable.
enum PmodStatus pmod_module_to_json(const struct PmodModule *m, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void pmod_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PMOD_H */
