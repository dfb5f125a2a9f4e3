#ifndef PURECHECK_PURECHECK_H
#define PURECHECK_PURECHECK_H

/* C interface to the checking library. Handles are opaque; every call that
 * can fail returns a pc_status and leaves a message for pc_last_error() on
 * the calling thread. Strings returned through char** are owned by the caller
 * and released with pc_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(PURECHECK_BUILDING)
#define PC_API __declspec(dllexport)
#else
#define PC_API __declspec(dllimport)
#endif
#else
#define PC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pc_status {
  PC_OK = 0,
  PC_NULL_ARGUMENT = 1,
  PC_INVALID_ARGUMENT = 2,
  PC_PARSE_ERROR = 3,
  PC_CONFIG_ERROR = 4,
  PC_OUT_OF_RANGE = 5,
  PC_INTERNAL_ERROR = 6
} pc_status;

typedef enum pc_outcome {
  PC_HOLDS = 0,
  PC_FALSIFIED = 1,
  PC_LOGICAL_ERROR = 2,
  PC_TACTICAL_ERROR = 3
} pc_outcome;

typedef enum pc_suite_kind {
  PC_SUITE_EMPTY = 0,
  PC_SUITE_DEFAULT = 1,
  PC_SUITE_CONTROLS = 2,
  PC_SUITE_ALL = 3
} pc_suite_kind;

typedef enum pc_format { PC_FORMAT_TEXT = 0, PC_FORMAT_JSON = 1 } pc_format;

typedef struct pc_suite pc_suite;
typedef struct pc_report pc_report;
typedef struct pc_word pc_word;

/* Borrowed views into a report; valid until the report is destroyed. */
typedef struct pc_entry {
  const char* name;
  pc_outcome outcome;
  const char* counterexample; /* "" unless falsified */
  const char* diagnostic;     /* "" unless an error */
  size_t samples;
  double ms;
} pc_entry;

typedef struct pc_summary {
  size_t holds;
  size_t falsified;
  size_t logical_error;
  size_t tactical_error;
} pc_summary;

PC_API const char* pc_status_string(pc_status status);
/* Message of the last failed call on this thread; "" if none. */
PC_API const char* pc_last_error(void);
PC_API const char* pc_version(void);
PC_API void pc_string_free(char* s);

/* Suites */
PC_API pc_status pc_suite_create(pc_suite_kind kind, pc_suite** out);
PC_API void pc_suite_destroy(pc_suite* suite);
PC_API pc_status pc_suite_size(const pc_suite* suite, size_t* out);
PC_API pc_status pc_suite_entry_name(const pc_suite* suite, size_t index, const char** out);
/* Tags joined by ','. */
PC_API pc_status pc_suite_entry_tags(const pc_suite* suite, size_t index, const char** out);
/* Registers a check with a fixed truth value; PC_CONFIG_ERROR on a taken name. */
PC_API pc_status pc_suite_add_constant(pc_suite* suite, const char* name, int value);
/* filter may be NULL; jobs of 0 means 1. */
PC_API pc_status pc_suite_run(const pc_suite* suite, int confidence, const char* filter,
                              unsigned jobs, pc_report** out);

/* Reports */
PC_API void pc_report_destroy(pc_report* report);
PC_API pc_status pc_report_size(const pc_report* report, size_t* out);
PC_API pc_status pc_report_entry(const pc_report* report, size_t index, pc_entry* out);
PC_API pc_status pc_report_summary(const pc_report* report, pc_summary* out);
PC_API pc_status pc_report_exit_code(const pc_report* report, int* out);
PC_API pc_status pc_report_render(const pc_report* report, pc_format format, char** out);

/* Edit words */
PC_API pc_status pc_word_parse(const char* text, pc_word** out);
PC_API void pc_word_destroy(pc_word* word);
PC_API pc_status pc_word_size(const pc_word* word, size_t* out);
PC_API pc_status pc_word_render(const pc_word* word, char** out);
/* *defined is 0 and *out NULL where the word does not apply. */
PC_API pc_status pc_word_apply(const pc_word* word, const char* input, int* defined,
                               char** out);
/* Rendering of the normal-form automaton. */
PC_API pc_status pc_word_semantics(const pc_word* word, char** out);
PC_API pc_status pc_word_equiv(const pc_word* x, const pc_word* y, int* out);
PC_API pc_status pc_brute_force_equiv(const pc_word* x, const pc_word* y,
                                      const char* alphabet, int max_len, int* out);

#ifdef __cplusplus
}
#endif

#endif
