#ifndef GALREP_GALREP_H
#define GALREP_GALREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GALREP_API __declspec(dllexport)
#else
#define GALREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; also the exit codes of the command-line tool. */
typedef enum galrep_status {
  GALREP_OK = 0,
  GALREP_ERR_VALIDATION = 1, /* malformed input or a violated invariant */
  GALREP_ERR_AMBIGUITY = 2,  /* the data does not determine the answer */
  GALREP_ERR_IO = 3,
  GALREP_ERR_INTERNAL = 4
} galrep_status;

typedef struct galrep_fixture galrep_fixture;
typedef struct galrep_options galrep_options;

/* Message of the last failing call on this thread; empty after a success. */
GALREP_API const char* galrep_last_error(void);

GALREP_API galrep_status galrep_fixture_load(const char* path, galrep_fixture** out);
GALREP_API galrep_status galrep_fixture_parse(const char* text, galrep_fixture** out);
GALREP_API void galrep_fixture_free(galrep_fixture* fixture);
/* Canonical text of the fixture; release with galrep_string_free. */
GALREP_API galrep_status galrep_fixture_serialize(const galrep_fixture* fixture, char** out);
/* 1 when both fixtures describe the same data, 0 otherwise. */
GALREP_API int galrep_fixture_equal(const galrep_fixture* a, const galrep_fixture* b);

GALREP_API galrep_options* galrep_options_new(void);
GALREP_API void galrep_options_free(galrep_options* options);
/* May be called repeatedly; `wd tensor` takes two representations. */
GALREP_API void galrep_options_add_rep(galrep_options* options, const char* name);
GALREP_API void galrep_options_set_subgroup(galrep_options* options, const char* name);
GALREP_API void galrep_options_set_limit(galrep_options* options, uint64_t limit);
GALREP_API void galrep_options_set_prime(galrep_options* options, uint64_t prime);
GALREP_API void galrep_options_set_stride(galrep_options* options, uint64_t stride);
GALREP_API void galrep_options_set_degree(galrep_options* options, uint32_t degree);
/* Nonzero selects `<command> key=value ...` records instead of text. */
GALREP_API void galrep_options_set_records(galrep_options* options, int records);

/* Runs a command given as words, e.g. {"wd", "poly"}. The report is written to *out
 * even on failure (possibly partial); release it with galrep_string_free. */
GALREP_API galrep_status galrep_run(const galrep_fixture* fixture, const char* const* words, size_t word_count,
                                    const galrep_options* options, char** out);

GALREP_API void galrep_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
