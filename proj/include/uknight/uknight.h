/*
 * C interface to the uknight solver and verifier.
 *
 * Every fallible call returns a uk_status; on failure uk_last_error() holds
 * a message for the calling thread until its next failing call. Handles are
 * opaque and owned by the caller, who releases them with the matching
 * *_free function. Strings returned through char** are released with
 * uk_string_free.
 */
#ifndef UKNIGHT_H_
#define UKNIGHT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef UKNIGHT_BUILDING
#    define UKNIGHT_API __declspec(dllexport)
#  else
#    define UKNIGHT_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#  define UKNIGHT_API __attribute__((visibility("default")))
#else
#  define UKNIGHT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uk_status {
  UK_OK = 0,
  UK_ERR_INVALID_ARGUMENT = 1,
  UK_ERR_PARSE = 2,
  UK_ERR_UNVERIFIED = 3,
  UK_ERR_IO = 4,
  UK_ERR_INTERNAL = 5
} uk_status;

typedef enum uk_format {
  UK_FORMAT_DOC = 0,      /* JSON tour document */
  UK_FORMAT_LAYERS = 1,   /* lettered layer tables */
  UK_FORMAT_POLYLINE = 2  /* Wavefront OBJ wireframe (write only) */
} uk_format;

typedef enum uk_mode { UK_MODE_EXHAUSTIVE = 0, UK_MODE_HEURISTIC = 1 } uk_mode;

typedef enum uk_stop {
  UK_STOP_COMPLETED = 0,
  UK_STOP_TIME_LIMIT = 1,
  UK_STOP_TARGET_REACHED = 2
} uk_stop;

typedef enum uk_violation_kind {
  UK_VIOLATION_OUT_OF_BOUNDS = 0,
  UK_VIOLATION_REPEATED_CELL = 1,
  UK_VIOLATION_NOT_KNIGHT_STEP = 2,
  UK_VIOLATION_CROSSING = 3,
  UK_VIOLATION_CLOSURE_NOT_KNIGHT_STEP = 4
} uk_violation_kind;

typedef enum uk_compare_kind {
  UK_COMPARE_BELOW = 0,
  UK_COMPARE_MATCHES = 1,
  UK_COMPARE_IMPROVES = 2,
  UK_COMPARE_UNLISTED = 3
} uk_compare_kind;

typedef struct uk_tour uk_tour;
typedef struct uk_report uk_report;
typedef struct uk_result uk_result;

UKNIGHT_API const char* uk_version(void);
UKNIGHT_API const char* uk_last_error(void);
UKNIGHT_API void uk_string_free(char* s);

/* "MxNxK" -> dims. */
UKNIGHT_API uk_status uk_parse_box(const char* text, int32_t dims[3]);

/* ---- tours ---------------------------------------------------------- */

/* xyz holds ncells packed (x, y, z) triples. */
UKNIGHT_API uk_status uk_tour_create(const int32_t dims[3], const int32_t* xyz, size_t ncells,
                                     int closed, uk_tour** out);
/* Accepts a tour document or a layer table. */
UKNIGHT_API uk_status uk_tour_decode(const char* text, uk_tour** out);
UKNIGHT_API uk_status uk_tour_load(const char* path, uk_tour** out);
UKNIGHT_API void uk_tour_free(uk_tour* tour);

UKNIGHT_API void uk_tour_dims(const uk_tour* tour, int32_t dims[3]);
UKNIGHT_API size_t uk_tour_cell_count(const uk_tour* tour);
UKNIGHT_API int64_t uk_tour_length(const uk_tour* tour);
UKNIGHT_API int uk_tour_closed(const uk_tour* tour);
/* Copies min(capacity, cell count) triples into xyz. */
UKNIGHT_API uk_status uk_tour_cells(const uk_tour* tour, int32_t* xyz, size_t capacity);

/* Layer and polyline output require a tour that passes verification
 * (UK_ERR_UNVERIFIED otherwise); documents are written as-is. */
UKNIGHT_API uk_status uk_tour_encode(const uk_tour* tour, uk_format format, char** out);

/* ---- verification --------------------------------------------------- */

UKNIGHT_API uk_status uk_verify(const uk_tour* tour, uk_report** out);
UKNIGHT_API void uk_report_free(uk_report* report);
UKNIGHT_API int uk_report_ok(const uk_report* report);
UKNIGHT_API int64_t uk_report_length(const uk_report* report);
UKNIGHT_API void uk_report_coverage(const uk_report* report, int64_t* visited, int64_t* volume,
                                    int* percent);
UKNIGHT_API size_t uk_report_violation_count(const uk_report* report);
UKNIGHT_API uk_status uk_report_violation(const uk_report* report, size_t i,
                                          uk_violation_kind* kind, int64_t* first,
                                          int64_t* second);
UKNIGHT_API uk_status uk_report_text(const uk_report* report, char** out);

/* ---- search ----------------------------------------------------------- */

typedef struct uk_solve_config {
  int32_t dims[3];
  int closed;
  uk_mode mode;
  double time_limit;     /* seconds; <= 0 means none */
  uint64_t seed;
  int32_t restarts;
  int32_t beam_width;
  int32_t threads;
  int64_t target_length; /* < 0: default (published record in heuristic mode) */
} uk_solve_config;

/* Defaults: 1x1x1 open heuristic, seed 0, 64 restarts, beam 1, 1 thread. */
UKNIGHT_API void uk_solve_config_init(uk_solve_config* config);

UKNIGHT_API uk_status uk_solve(const uk_solve_config* config, uk_result** out);
UKNIGHT_API void uk_result_free(uk_result* result);

typedef struct uk_result_info {
  int64_t length;
  int optimal;
  uint64_t nodes_expanded;
  int64_t restarts_done;
  double elapsed;
  uk_stop stopped_by;
  int64_t target_length; /* -1 when no target applied */
} uk_result_info;

UKNIGHT_API void uk_result_get_info(const uk_result* result, uk_result_info* info);
/* New tour handle with the run metadata (mode, seed, generator, ...). */
UKNIGHT_API uk_status uk_result_tour(const uk_result* result, uk_tour** out);

/* ---- records ---------------------------------------------------------- */

/* Registry as a text table (json = 0) or a JSON document (json != 0),
 * optionally restricted to one shape (dims may be NULL). */
UKNIGHT_API uk_status uk_records_encode(const int32_t* dims, int json, char** out);

/* record_length is -1 when the shape is unlisted. */
UKNIGHT_API uk_status uk_compare(const int32_t dims[3], int closed, int64_t length,
                                 uk_compare_kind* kind, int64_t* delta,
                                 int64_t* record_length);

#ifdef __cplusplus
}
#endif

#endif /* UKNIGHT_H_ */
