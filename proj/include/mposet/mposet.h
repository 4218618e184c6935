/*
 * C interface to libmposet.
 *
 * Objects are opaque handles created by mpo_*_build / mpo_*_parse and
 * released with the matching mpo_*_free. Every fallible call returns an
 * mpo_status; on failure mpo_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap-allocated and
 * must be released with mpo_string_free.
 *
 * Positions, values and levels are 1-based, element indices 0-based.
 */
#ifndef MPOSET_MPOSET_H
#define MPOSET_MPOSET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MPOSET_BUILDING_LIBRARY)
#    define MPOSET_API __declspec(dllexport)
#  else
#    define MPOSET_API __declspec(dllimport)
#  endif
#else
#  define MPOSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpo_status {
  MPO_OK = 0,
  MPO_ERR_INVALID_INPUT = 1,
  MPO_ERR_INVALID_ARGUMENT = 2,
  MPO_ERR_RESOURCE_LIMIT = 3,
  MPO_ERR_NULL_POINTER = 4,
  MPO_ERR_BUFFER_TOO_SMALL = 5,
  MPO_ERR_INTERNAL = 6
} mpo_status;

typedef enum mpo_format {
  MPO_FORMAT_TEXT = 0,
  MPO_FORMAT_JSON = 1,
  MPO_FORMAT_DOT = 2
} mpo_format;

typedef struct mpo_perm mpo_perm;
typedef struct mpo_mposet mpo_mposet;
typedef struct mpo_report mpo_report;

MPOSET_API const char* mpo_version(void);
MPOSET_API const char* mpo_last_error(void);
MPOSET_API const char* mpo_status_name(mpo_status status);
MPOSET_API void mpo_string_free(char* s);

/* Permutations: "35142" or "10,3,1,..." */
MPOSET_API mpo_status mpo_perm_parse(const char* text, mpo_perm** out);
MPOSET_API mpo_status mpo_perm_from_word(const int32_t* word, size_t n, mpo_perm** out);
MPOSET_API mpo_status mpo_decode_lehmer(const int32_t* code, size_t n, mpo_perm** out);
MPOSET_API void mpo_perm_free(mpo_perm* p);
MPOSET_API size_t mpo_perm_size(const mpo_perm* p);
MPOSET_API mpo_status mpo_perm_word(const mpo_perm* p, int32_t* out, size_t capacity);
MPOSET_API mpo_status mpo_perm_format(const mpo_perm* p, char** out);

MPOSET_API mpo_status mpo_lehmer_code(const mpo_perm* p, int32_t* out, size_t capacity);
/* Space-separated entries, e.g. "2 2 0 0". */
MPOSET_API mpo_status mpo_lehmer_format(const mpo_perm* p, char** out);
MPOSET_API mpo_status mpo_inversion_count(const mpo_perm* p, size_t* out);
/* "(1,3) (1,4) ..." in increasing order; empty string for the identity. */
MPOSET_API mpo_status mpo_inversions_format(const mpo_perm* p, char** out);

/* `positions` may be NULL; otherwise it receives mpo_perm_size(pattern)
 * entries of the lexicographically smallest occurrence. */
MPOSET_API mpo_status mpo_contains_pattern(const mpo_perm* w, const mpo_perm* pattern,
                                           int* found, int32_t* positions);
/* `patterns` is a comma-separated list such as "3412,3421". */
MPOSET_API mpo_status mpo_avoids_patterns(const mpo_perm* w, const char* patterns,
                                          int* avoids);

/* The interval [e, w]: one permutation per line (TEXT) or a JSON array. */
MPOSET_API mpo_status mpo_lambda_format(const mpo_perm* w, mpo_format format, char** out);

/* The join-irreducible poset M_w. */
MPOSET_API mpo_status mpo_mposet_build(const mpo_perm* w, mpo_mposet** out);
MPOSET_API void mpo_mposet_free(mpo_mposet* m);
MPOSET_API size_t mpo_mposet_size(const mpo_mposet* m);
MPOSET_API mpo_status mpo_mposet_element(const mpo_mposet* m, size_t index, int32_t* i,
                                         int32_t* x, int32_t* vec, size_t capacity);
MPOSET_API mpo_status mpo_mposet_less(const mpo_mposet* m, size_t a, size_t b, int* out);
MPOSET_API mpo_status mpo_mposet_b2_free(const mpo_mposet* m, int* out);
/* JSON export document or DOT Hasse diagram. */
MPOSET_API mpo_status mpo_mposet_export(const mpo_mposet* m, mpo_format format, char** out);

/* Exhaustive verification. */
typedef struct mpo_verify_options {
  int32_t n;
  uint32_t workers;
  uint32_t max_witnesses;
  int override_cap;
} mpo_verify_options;

MPOSET_API void mpo_verify_options_init(mpo_verify_options* options);
MPOSET_API size_t mpo_claim_count(void);
MPOSET_API const char* mpo_claim_id(size_t index);
MPOSET_API const char* mpo_claim_description(size_t index);
MPOSET_API int32_t mpo_claim_default_cap(size_t index);

MPOSET_API mpo_status mpo_verify(const char* claim_id, const mpo_verify_options* options,
                                 mpo_report** out);
MPOSET_API void mpo_report_free(mpo_report* r);
MPOSET_API int mpo_report_passed(const mpo_report* r);
MPOSET_API uint64_t mpo_report_checked(const mpo_report* r);
MPOSET_API uint64_t mpo_report_counterexample_count(const mpo_report* r);
MPOSET_API mpo_status mpo_report_format(const mpo_report* r, mpo_format format, char** out);

/* Counting over S_n. */
MPOSET_API mpo_status mpo_count_avoiders(int32_t n, const char* patterns, uint32_t workers,
                                         int override_cap, uint64_t* out);
MPOSET_API mpo_status mpo_count_b2_free(int32_t n, uint32_t workers, int override_cap,
                                        uint64_t* out);
MPOSET_API mpo_status mpo_catalan(int32_t n, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* MPOSET_MPOSET_H */
