#ifndef KUNZKIT_H
#define KUNZKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum kk_status {
  KK_STATUS_OK = 0,
  KK_STATUS_INVALID_ARGUMENT = 1,
  KK_STATUS_NOT_COFINITE = 2,
  KK_STATUS_HYPOTHESIS = 3,
  KK_STATUS_INTERNAL = 4,
  KK_STATUS_NULL_POINTER = 5,
  KK_STATUS_BUFFER_TOO_SMALL = 6,
} kk_status;

/**
 * Opaque Kunz nilsemigroup.
 */
typedef struct kk_nilsemigroup kk_nilsemigroup;

/**
 * Opaque numerical semigroup.
 */
typedef struct kk_semigroup kk_semigroup;

typedef struct kk_invariants {
  uint64_t multiplicity;
  uint64_t embedding_dimension;
  uint64_t codimension;
  /**
   * -1 for the nonnegative integers.
   */
  int64_t frobenius;
} kk_invariants;

typedef struct kk_nil_summary {
  uint64_t multiplicity;
  uint64_t embedding_dimension;
  uint64_t outer_betti;
  uint64_t nil_trades;
  uint64_t eta;
} kk_nil_summary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *kk_version(void);

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next kunzkit call on this thread.
 */
const char *kk_last_error(void);

/**
 * Releases a string produced by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from a kunzkit out-parameter and not be freed twice.
 */
void kk_string_free(char *s);

/**
 * Builds the semigroup generated by `generators[0..len]`.
 *
 * # Safety
 * `generators` must point to `len` readable values and `out` must be writable.
 */
enum kk_status kk_semigroup_new(const uint64_t *generators, size_t len, struct kk_semigroup **out);

/**
 * # Safety
 * `s` must be null or a handle from this library that is not used afterwards.
 */
void kk_semigroup_free(struct kk_semigroup *s);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum kk_status kk_semigroup_invariants(const struct kk_semigroup *s, struct kk_invariants *out);

/**
 * Minimal generators, ascending. `*len` is set to the count even when the
 * buffer is too small.
 *
 * # Safety
 * `s` must be a live handle, `buf` must have room for `cap` values, `len` writable.
 */
enum kk_status kk_semigroup_generators(const struct kk_semigroup *s,
                                       uint64_t *buf,
                                       size_t cap,
                                       size_t *len);

/**
 * Apéry set with respect to the multiplicity, indexed by residue.
 *
 * # Safety
 * As for [`kk_semigroup_generators`].
 */
enum kk_status kk_semigroup_apery(const struct kk_semigroup *s,
                                  uint64_t *buf,
                                  size_t cap,
                                  size_t *len);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum kk_status kk_semigroup_contains(const struct kk_semigroup *s, uint64_t n, bool *out);

/**
 * Minimal presentation cardinality through the Kunz nilsemigroup.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum kk_status kk_semigroup_eta(const struct kk_semigroup *s, uint64_t *out);

/**
 * Minimal presentation cardinality by scanning factorization graphs.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum kk_status kk_semigroup_eta_direct(const struct kk_semigroup *s, uint64_t *out);

/**
 * The `info --format json` document; free it with [`kk_string_free`].
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum kk_status kk_semigroup_info_json(const struct kk_semigroup *s, char **out);

/**
 * Builds a verified family member. Parameters a family does not use are
 * ignored; pass 0 for those. `extend` needs [`kk_family_extend`].
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum kk_status kk_family(const char *name,
                         uint64_t m,
                         uint64_t e,
                         uint64_t r,
                         uint64_t s,
                         uint64_t eta,
                         struct kk_semigroup **out);

/**
 * `m·ℕ + (m+1)·base`, raising `e` and `η` by one.
 *
 * # Safety
 * `base` must be a live handle and `out` writable.
 */
enum kk_status kk_family_extend(const struct kk_semigroup *base,
                                uint64_t m,
                                struct kk_semigroup **out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum kk_status kk_nilsemigroup_from_semigroup(const struct kk_semigroup *s,
                                              struct kk_nilsemigroup **out);

/**
 * # Safety
 * `n` must be null or a handle from this library that is not used afterwards.
 */
void kk_nilsemigroup_free(struct kk_nilsemigroup *n);

/**
 * # Safety
 * `n` must be a live handle and `out` writable.
 */
enum kk_status kk_nilsemigroup_summary(const struct kk_nilsemigroup *n, struct kk_nil_summary *out);

/**
 * Hasse diagram of the Kunz poset in DOT; free it with [`kk_string_free`].
 *
 * # Safety
 * `n` must be a live handle and `out` writable.
 */
enum kk_status kk_nilsemigroup_dot(const struct kk_nilsemigroup *n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KUNZKIT_H */
