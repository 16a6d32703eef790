/* patchcount - exact counting of pseudoline patch reroutings and assembly of
 * arrangement lower bounds.
 *
 * C interface: opaque handles, status codes, and strings allocated by the
 * library. Every function returns PC_OK on success; on failure the return
 * value names the error class and pc_last_error() carries a message for the
 * calling thread. Strings returned through out-parameters must be released
 * with pc_string_free().
 */

#ifndef PATCHCOUNT_H
#define PATCHCOUNT_H

#include <stddef.h>

#if defined(_WIN32)
#define PATCHCOUNT_API __declspec(dllexport)
#else
#define PATCHCOUNT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pc_status {
  PC_OK = 0,
  PC_ERROR_PARSE = 1,      /* malformed input text */
  PC_ERROR_VALIDATE = 2,   /* input violates a model invariant */
  PC_ERROR_CAPACITY = 3,   /* instance exceeds an implementation limit */
  PC_ERROR_IO = 4,         /* file system failure */
  PC_ERROR_ARGUMENT = 5,   /* null pointer or out-of-range argument */
  PC_ERROR_INTERNAL = 6    /* broken internal invariant */
} pc_status;

typedef struct pc_patch pc_patch;
typedef struct pc_biperm pc_biperm;

typedef struct pc_count_options {
  int threads;            /* 0 or 1: sequential */
  long long memo_cap;     /* 0: unbounded memo table */
} pc_count_options;

typedef struct pc_count_stats {
  long long memo_entries;
  long long memo_hits;
  double seconds;
} pc_count_stats;

PATCHCOUNT_API const char* pc_version(void);

/* Message for the most recent failure on this thread; never NULL. */
PATCHCOUNT_API const char* pc_last_error(void);

PATCHCOUNT_API void pc_string_free(char* s);

/* ---- patches ---------------------------------------------------------- */

PATCHCOUNT_API pc_status pc_patch_parse(const char* text, pc_patch** out);
PATCHCOUNT_API pc_status pc_patch_parse_file(const char* path, pc_patch** out);

/* The l x l three-slope square patch. */
PATCHCOUNT_API pc_status pc_patch_grid3(long side, pc_patch** out);

PATCHCOUNT_API void pc_patch_free(pc_patch* patch);

PATCHCOUNT_API pc_status pc_patch_segment_count(const pc_patch* patch, int* out);

/* Exact area as a rational string "p/q" (or "p" for integers). */
PATCHCOUNT_API pc_status pc_patch_area(const pc_patch* patch, char** out);

/* Interior multicrossing census as lines "order count", highest order last. */
PATCHCOUNT_API pc_status pc_patch_census(const pc_patch* patch, char** out);

PATCHCOUNT_API pc_status pc_patch_bipermutation(const pc_patch* patch, pc_biperm** out);

/* ---- bipermutations ---------------------------------------------------- */

/* Whitespace-separated labels, each appearing exactly twice. */
PATCHCOUNT_API pc_status pc_biperm_parse(const char* text, pc_biperm** out);

/* The complete patch: every pair of the n segments crosses. */
PATCHCOUNT_API pc_status pc_biperm_complete(int n, pc_biperm** out);

PATCHCOUNT_API void pc_biperm_free(pc_biperm* biperm);

PATCHCOUNT_API pc_status pc_biperm_to_string(const pc_biperm* biperm, char** out);
PATCHCOUNT_API pc_status pc_biperm_segment_count(const pc_biperm* biperm, int* out);

/* Exact number of reroutings, as a decimal string. options and stats may be
 * NULL. */
PATCHCOUNT_API pc_status pc_count_reroutings(const pc_biperm* biperm,
                                             const pc_count_options* options,
                                             char** count_out,
                                             pc_count_stats* stats);

/* ---- numeric helpers --------------------------------------------------- */

/* log2 of a positive decimal integer, rounded down to `places` decimals. */
PATCHCOUNT_API pc_status pc_log2_decimal(const char* count_decimal, int places,
                                         char** out);

/* ---- determinant counting ---------------------------------------------- */

PATCHCOUNT_API pc_status pc_lgv_count(long side, char** out);
PATCHCOUNT_API pc_status pc_lgv_log2(long side, int places, char** out);

/* ---- bound assembly ----------------------------------------------------- */

/* Runs a construction config and renders the contribution table plus the
 * SUMMARY line. base_dir (may be NULL) resolves relative patch paths. */
PATCHCOUNT_API pc_status pc_bound_report(const char* config_path,
                                         const char* base_dir, int threads,
                                         char** report_out);

/* ---- oracles and verification ------------------------------------------ */

/* Arrangement count via the reduced-word commutation-class oracle, 2<=n<=6. */
PATCHCOUNT_API pc_status pc_oracle_bn(int n, char** out);

/* Cross-checks the independent counters; *mismatches receives the number of
 * disagreeing cases. */
PATCHCOUNT_API pc_status pc_oracle_crosscheck(int l_max, int n_max,
                                              char** report_out, int* mismatches);

/* Runs the verification suite rooted at data_dir; *failures receives the
 * number of failed checks. */
PATCHCOUNT_API pc_status pc_verify(const char* data_dir, int allow_long,
                                   int threads, char** report_out, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* PATCHCOUNT_H */
