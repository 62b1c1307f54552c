#ifndef PRM_LCC_H
#define PRM_LCC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PrmFamily {
  PRM_FAMILY_PRM = 0,
  PRM_FAMILY_GRM = 1,
  PRM_FAMILY_RS = 2,
  PRM_FAMILY_ERS = 3,
} PrmFamily;

typedef enum PrmMode {
  // `d + 1` queries, best effort.
  PRM_MODE_T1 = 0,
  // `q` queries with unique decoding along the line.
  PRM_MODE_T2 = 1,
} PrmMode;

typedef enum PrmStatus {
  PRM_STATUS_OK = 0,
  PRM_STATUS_NULL_POINTER = 1,
  PRM_STATUS_INVALID_ARGUMENT = 2,
  // The error-correcting decoder found too many errors on its line.
  PRM_STATUS_DECODE_FAILURE = 3,
  // No local decoder exists for this family and mode.
  PRM_STATUS_UNSUPPORTED = 4,
  PRM_STATUS_INTERNAL = 5,
} PrmStatus;

// Opaque code handle.
typedef struct PrmCode PrmCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a code. `m` is ignored for RS and ERS. On success `*out` owns a
// handle that must be released with `prm_code_free`.
//
// # Safety
// `out` must be null or valid for writes.
enum PrmStatus prm_code_new(enum PrmFamily family,
                            uint32_t p,
                            uint32_t k,
                            uint32_t d,
                            uint32_t m,
                            struct PrmCode **out);

// # Safety
// `code` must be null or a handle from `prm_code_new` not yet freed.
void prm_code_free(struct PrmCode *code);

// Codeword length `n`, or 0 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
size_t prm_code_length(const struct PrmCode *code);

// Message length `k`, or 0 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
size_t prm_code_message_length(const struct PrmCode *code);

// Field size `q`, or 0 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
uint32_t prm_code_field_size(const struct PrmCode *code);

// Encodes `message` (monomial order) into `out`.
//
// # Safety
// `message` must hold `message_len` values and `out` must have room for
// `out_len` values.
enum PrmStatus prm_code_encode(const struct PrmCode *code,
                               const uint32_t *message,
                               size_t message_len,
                               uint32_t *out,
                               size_t out_len);

// Writes `word` with exactly `floor(delta * n)` positions changed to `out`.
//
// # Safety
// `word` and `out` must each hold `len` values.
enum PrmStatus prm_code_corrupt(const struct PrmCode *code,
                                const uint32_t *word,
                                size_t len,
                                double delta,
                                uint64_t seed,
                                uint32_t *out);

// Locally corrects symbol `index` of `word`. Returns `DecodeFailure` when
// mode T2 cannot decode the sampled line; `*value` is then untouched.
//
// # Safety
// `word` must hold `len` values and `value` must be valid for writes.
enum PrmStatus prm_local_correct(const struct PrmCode *code,
                                 const uint32_t *word,
                                 size_t len,
                                 size_t index,
                                 enum PrmMode mode,
                                 uint64_t seed,
                                 uint32_t *value);

// Brute-force minimum distance. Fails with `InvalidArgument` when `q^k`
// exceeds 2^20 messages.
//
// # Safety
// `distance` must be valid for writes.
enum PrmStatus prm_code_min_distance(const struct PrmCode *code, size_t *distance);

// Static, NUL-terminated description of a status code.
const char *prm_status_message(enum PrmStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRM_LCC_H */
