#ifndef KCONE_KCONE_H
#define KCONE_KCONE_H

/* C interface to libkcone. Objects are opaque handles; every call returns a
 * kcone_status and reports values through out-parameters. Strings returned
 * by the library are owned by the caller and released with kcone_string_free.
 * Big integers cross the boundary as decimal strings. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KCONE_API __declspec(dllexport)
#else
#define KCONE_API __attribute__((visibility("default")))
#endif

typedef enum kcone_status {
  KCONE_OK = 0,
  KCONE_INVALID_ARGUMENT = 1,
  KCONE_NOT_A_SECTION = 2,
  KCONE_NOT_REDUCED = 3,
  KCONE_NON_INTEGRAL = 4,
  KCONE_INTERNAL_NON_INTEGRAL = 5,
  KCONE_WORD_NOT_FOUND = 6,
  KCONE_FIBER_DEGENERATE = 7,
  KCONE_DEGENERATE = 8,
  KCONE_MALFORMED_INPUT = 9,
  KCONE_INTERNAL = 10,
  KCONE_NULL_POINTER = 11,
  KCONE_IO_ERROR = 12
} kcone_status;

typedef struct kcone_class kcone_class;
typedef struct kcone_word kcone_word;

KCONE_API const char* kcone_version(void);
KCONE_API const char* kcone_status_name(kcone_status status);
/* Message of the last failed call on this thread; empty after success. */
KCONE_API const char* kcone_last_error(void);
KCONE_API void kcone_string_free(char* s);

/* Divisor classes on the surface, coordinates (h, e1, ..., e9). */
KCONE_API kcone_status kcone_class_new(const long coords[10], kcone_class** out);
KCONE_API kcone_status kcone_class_from_json(const char* json, kcone_class** out);
KCONE_API kcone_status kcone_class_to_json(const kcone_class* x, char** out);
KCONE_API kcone_status kcone_class_coeff(const kcone_class* x, int index, char** out);
KCONE_API void kcone_class_free(kcone_class* x);

KCONE_API kcone_status kcone_pair(const kcone_class* x, const kcone_class* y, char** out);
KCONE_API kcone_status kcone_reflect(const kcone_class* x, int root_index, kcone_class** out);
/* Reduces x into the closed fundamental chamber; returns the word and image. */
KCONE_API kcone_status kcone_reduce(const kcone_class* x, long max_steps, kcone_word** word, kcone_class** image);
KCONE_API kcone_status kcone_surface_nef(const kcone_class* x, int* nef);

/* Weyl words, letters are root indices 0..8 applied right to left. */
KCONE_API kcone_status kcone_word_new(const int* letters, size_t length, kcone_word** out);
KCONE_API size_t kcone_word_length(const kcone_word* w);
KCONE_API int kcone_word_letter(const kcone_word* w, size_t k);
KCONE_API kcone_status kcone_word_apply(const kcone_word* w, const kcone_class* x, kcone_class** out);
KCONE_API kcone_status kcone_word_is_identity(const kcone_word* w, int* identity);
KCONE_API void kcone_word_free(kcone_word* w);

/* Runs a named subcommand on a JSON document. *output receives the JSON
 * result or error document; *exit_code is 0, 1 (domain error) or 2
 * (malformed input). max_steps <= 0 selects the default cap, bound < 0
 * leaves the census bound to the input, data_dir may be NULL. */
KCONE_API kcone_status kcone_run(const char* command, const char* input_json, long max_steps, long bound,
                                 const char* data_dir, char** output, int* exit_code);

/* Writes fixtures and golden outputs under dir; *listing receives the
 * newline-separated list of files written. */
KCONE_API kcone_status kcone_emit_fixtures(const char* dir, char** listing);

#ifdef __cplusplus
}
#endif

#endif
