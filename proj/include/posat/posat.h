/*
 * posat: exact saturation numbers of posets in the Boolean lattice.
 *
 * C interface. Objects are opaque handles created by the library and released
 * with the matching *_free function. Every fallible call returns a
 * posat_status; on failure posat_last_error() describes the problem (the
 * message is per-thread and valid until the next failing call on that thread).
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with posat_string_free().
 *
 * Sets are bit masks: element i of [n] is bit i-1.
 */
#ifndef POSAT_POSAT_H
#define POSAT_POSAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(POSAT_BUILDING)
#    define POSAT_API __declspec(dllexport)
#  else
#    define POSAT_API __declspec(dllimport)
#  endif
#else
#  define POSAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum posat_status {
  POSAT_OK = 0,
  POSAT_ERR_INVALID_ARGUMENT = 1,
  POSAT_ERR_OUT_OF_RANGE = 2,
  POSAT_ERR_CYCLE = 3,
  POSAT_ERR_PARSE = 4,
  POSAT_ERR_INSTANCE_TOO_LARGE = 5,
  POSAT_ERR_NOT_FREE = 6,
  POSAT_ERR_DEGENERATE = 7,
  POSAT_ERR_SEPARATED = 8,
  POSAT_ERR_INTERNAL = 9
} posat_status;

typedef enum posat_mode { POSAT_WEAK = 0, POSAT_INDUCED = 1 } posat_mode;

typedef enum posat_pair_kind {
  POSAT_PAIR_ALL_AVOID = 0,
  POSAT_PAIR_ALL_CONTAIN = 1,
  POSAT_PAIR_MIXED = 2
} posat_pair_kind;

typedef struct posat_poset posat_poset;
typedef struct posat_family posat_family;
typedef struct posat_result posat_result;

typedef struct posat_search_options {
  int max_size;        /* -1: up to 2^n */
  int symmetry;        /* nonzero: orbit pruning */
  int theorem_pruning; /* nonzero: start at the UCTP bound */
  int threads;
  int max_n;
  int collect_all_minimum;
  double time_limit; /* seconds, <= 0 for none */
  const uint32_t* excluded;
  size_t excluded_count;
} posat_search_options;

POSAT_API const char* posat_version(void);
POSAT_API const char* posat_last_error(void);
POSAT_API const char* posat_status_name(posat_status status);
POSAT_API void posat_string_free(char* s);
POSAT_API void posat_masks_free(uint32_t* masks);

/* Posets */
POSAT_API posat_status posat_poset_from_covers(int m, const int* pairs, size_t pair_count, posat_poset** out);
/* k <= 0 takes the arity from a "-k" suffix of name. */
POSAT_API posat_status posat_poset_named(const char* name, int k, posat_poset** out);
POSAT_API posat_status posat_poset_from_json(const char* json, posat_poset** out);
POSAT_API posat_status posat_poset_to_json(const posat_poset* p, char** out);
POSAT_API posat_status posat_poset_to_dot(const posat_poset* p, char** out);
POSAT_API int posat_poset_size(const posat_poset* p);
/* Writes up to capacity (lower, upper) pairs; *count receives the total. */
POSAT_API posat_status posat_poset_covers(const posat_poset* p, int* pairs, size_t capacity, size_t* count);
POSAT_API posat_status posat_poset_dual(const posat_poset* p, posat_poset** out);
/* perm must hold posat_poset_size(p) ints; *found is 0 when not isomorphic. */
POSAT_API posat_status posat_poset_isomorphic(const posat_poset* p, const posat_poset* q, int* found, int* perm);
/* *violating is -1 when UCTP holds. */
POSAT_API posat_status posat_poset_check_uctp(const posat_poset* p, int* holds, int* in_class, int* violating);
POSAT_API void posat_poset_free(posat_poset* p);

/* Families */
POSAT_API posat_status posat_family_from_masks(int n, const uint32_t* masks, size_t count, posat_family** out);
POSAT_API posat_status posat_family_from_json(const char* json, posat_family** out);
POSAT_API posat_status posat_family_to_json(const posat_family* f, char** out);
POSAT_API int posat_family_ground(const posat_family* f);
POSAT_API size_t posat_family_size(const posat_family* f);
/* Canonical order; writes min(capacity, size) masks. */
POSAT_API size_t posat_family_masks(const posat_family* f, uint32_t* out, size_t capacity);
POSAT_API posat_status posat_family_complement(const posat_family* f, posat_family** out);
POSAT_API posat_status posat_family_induced_poset(const posat_family* f, posat_poset** out);
POSAT_API void posat_family_free(posat_family* f);

/* Copies and saturation. images must hold posat_poset_size(p) masks. */
POSAT_API posat_status posat_find_copy(const posat_family* f, const posat_poset* p, posat_mode mode, int* found,
                                       uint32_t* images);
/* Embedding JSON of the first copy, or "null". */
POSAT_API posat_status posat_find_copy_json(const posat_family* f, const posat_poset* p, posat_mode mode,
                                            char** out);
POSAT_API posat_status posat_is_free(const posat_family* f, const posat_poset* p, posat_mode mode, int* out);
POSAT_API posat_status posat_is_saturated(const posat_family* f, const posat_poset* p, posat_mode mode, int* out);
/* Fails with POSAT_ERR_NOT_FREE when f contains a copy. Release with posat_masks_free. */
POSAT_API posat_status posat_unsaturated_witnesses(const posat_family* f, const posat_poset* p, posat_mode mode,
                                                   uint32_t** masks, size_t* count);

/* Search */
POSAT_API void posat_search_options_init(posat_search_options* opts);
POSAT_API posat_status posat_search(int n, const posat_poset* p, posat_mode mode, const posat_search_options* opts,
                                    posat_result** out);
/* -1 when no saturated family exists up to the searched size. */
POSAT_API int posat_result_value(const posat_result* r);
POSAT_API int posat_result_exhaustive(const posat_result* r);
POSAT_API uint64_t posat_result_families_examined(const posat_result* r);
POSAT_API double posat_result_wall_time(const posat_result* r);
/* Certificate copy, or NULL when there is no value. Caller frees. */
POSAT_API posat_family* posat_result_certificate(const posat_result* r);
POSAT_API posat_status posat_result_to_json(const posat_result* r, char** out);
POSAT_API void posat_result_free(posat_result* r);

/* Constructions. k/ell <= 0 and target == NULL mean "not given". */
POSAT_API posat_status posat_construct(const char* name, int n, int k, int ell, const char* target, int verify,
                                       posat_family** family, char** sidecar_json);

/* Lower-bound machinery */
POSAT_API posat_status posat_separability_graph_json(const posat_family* f, char** out);
POSAT_API posat_status posat_separability_graph_dot(const posat_family* f, char** out);
POSAT_API posat_status posat_bc_exact_json(const char* graph_json, int* value, char** cover_json);
/* *all is 1 when every pair is separated; otherwise (*x, *y) is the least missing pair. */
POSAT_API posat_status posat_separates_all_pairs(const posat_family* f, int* all, int* x, int* y);
POSAT_API posat_status posat_dilworth_json(const posat_family* f, int* width, char** chains_json);
POSAT_API posat_status posat_family_size_lower_bound(const posat_family* f, int* out);
POSAT_API posat_status posat_uctp_lower_bound(const posat_poset* p, int n, int* out);
POSAT_API posat_status posat_pair_profile(const posat_family* f, int x, int y, posat_pair_kind* out);

/* Bound table rows as a JSON array. compute_up_to: rows with n <= it are searched. */
POSAT_API posat_status posat_table_json(const char* poset_key, posat_mode mode, int n_lo, int n_hi, int compute_up_to,
                                        int threads, char** out);

#ifdef __cplusplus
}
#endif

#endif /* POSAT_POSAT_H */
