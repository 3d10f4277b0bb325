#ifndef PFAFFCY_H
#define PFAFFCY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define PFAFFCY_API __attribute__((visibility("default")))
#else
#define PFAFFCY_API
#endif

/* Return codes. Checks that ran and failed are not errors: they are
 * reported through pfaffcy_run_passed / pfaffcy_verify_json. */
enum pfaffcy_status {
  PFAFFCY_OK = 0,
  PFAFFCY_ERROR_INVALID_ARGUMENT = -1,
  PFAFFCY_ERROR_NULL_POINTER = -2,
  PFAFFCY_ERROR_INSUFFICIENT_BUFFER = -3,
  PFAFFCY_ERROR_IO = -4,
  PFAFFCY_ERROR_UNSUPPORTED = -5,
  PFAFFCY_ERROR_COMPUTATION = -6,
  PFAFFCY_ERROR_INTERNAL = -99,
};

const char* pfaffcy_error_description(int code) PFAFFCY_API;
/* Message of the last failing call on this thread ("" if none). */
const char* pfaffcy_last_error(void) PFAFFCY_API;

const char* pfaffcy_version_string(void) PFAFFCY_API;

int pfaffcy_set_threads(int n) PFAFFCY_API;

/* Family tags, one per call; *count receives the number of tags. */
int pfaffcy_family_count(size_t* count) PFAFFCY_API;
const char* pfaffcy_family_tag(size_t i) PFAFFCY_API;

typedef struct pfaffcy_run_struct* pfaffcy_run_t;

/* level: "fast", "slice" or "full". */
int pfaffcy_run_create(pfaffcy_run_t* run, const char* family, uint32_t prime, uint64_t seed, const char* level, int force) PFAFFCY_API;
int pfaffcy_run_destroy(pfaffcy_run_t run) PFAFFCY_API;

int pfaffcy_run_passed(pfaffcy_run_t run, int* passed) PFAFFCY_API;
/* -1 in *k when the family has no fibre count. */
int pfaffcy_run_numbers(pfaffcy_run_t run, int* k, int* section_dim, int* proj_dim, int64_t* degree) PFAFFCY_API;
int pfaffcy_run_hr(pfaffcy_run_t run, int64_t hr[4]) PFAFFCY_API;

/* Buffer protocol: on entry *len is the capacity of out; on exit it holds
 * the required size including the terminating NUL. A NULL or short buffer
 * gives PFAFFCY_ERROR_INSUFFICIENT_BUFFER. */
int pfaffcy_run_failure(pfaffcy_run_t run, char* out, size_t* len) PFAFFCY_API;
int pfaffcy_run_artifact_json(pfaffcy_run_t run, int with_timings, char* out, size_t* len) PFAFFCY_API;
int pfaffcy_run_report_json(pfaffcy_run_t run, int with_timings, char* out, size_t* len) PFAFFCY_API;

/* Re-verifies a serialized artifact from its ideal. The report omits
 * timings, so repeated calls give identical text. */
int pfaffcy_verify_json(const char* artifact, int* passed, char* report, size_t* len) PFAFFCY_API;

typedef struct {
  int k;
  int dim_mk;
  int64_t tonoli;
  int64_t hodge;
  /* -1 when no Picard bound >= 2 follows */
  int64_t picard;
} pfaffcy_dims_t;

int pfaffcy_dims(int k, pfaffcy_dims_t* out) PFAFFCY_API;

#ifdef __cplusplus
}
#endif

#endif
