/* C interface for the minlines library. */

#ifndef MINLINES_H
#define MINLINES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define MINLINES_OK 0

/**
 * Internal invariant violation or enumeration-cap overflow.
 */
#define MINLINES_ERR_INTERNAL 1

/**
 * Invalid input (bad type string, non-reduced word, precondition failure).
 */
#define MINLINES_ERR_INPUT 2

/**
 * Null pointer or malformed UTF-8/JSON at the boundary.
 */
#define MINLINES_ERR_ARGUMENT 3

/**
 * Opaque handle to an immutable root system.
 */
typedef struct MinlinesSystem MinlinesSystem;

/**
 * Parse a Dynkin type string (e.g. "A4", "D5", "A2xA1") into a handle.
 *
 * # Safety
 * `type_str` must be NUL-terminated; `out` must be a valid pointer.
 */
int32_t minlines_system_new(const char *type_str, struct MinlinesSystem **out);

/**
 * Release a handle from `minlines_system_new`. Null is ignored.
 *
 * # Safety
 * `sys` must be a pointer previously returned by `minlines_system_new`,
 * released at most once.
 */
void minlines_system_free(struct MinlinesSystem *sys);

/**
 * Rank of the system, or -1 for a null handle.
 *
 * # Safety
 * `sys` must be a live handle or null.
 */
int64_t minlines_system_rank(const struct MinlinesSystem *sys);

/**
 * Number of positive roots, or -1 for a null handle.
 *
 * # Safety
 * `sys` must be a live handle or null.
 */
int64_t minlines_system_positive_roots(const struct MinlinesSystem *sys);

/**
 * Run a named operation with JSON arguments; on success `*out_json` holds a
 * JSON document. Operation names match the CLI subcommands ("root-system",
 * "weyl", "curves", "lines", "smooth", "bs", "quiver", "decompose",
 * "check5", "families", plus "gamma" and "schubert-families"); arguments use
 * the same 1-based string conventions as the CLI flags, e.g.
 * `{"type": "A3", "levi": "1,3", "word": "1 3 2"}`.
 *
 * # Safety
 * `op` and `args_json` must be NUL-terminated; `out_json` must be a valid
 * pointer. The returned string must be freed with `minlines_string_free`.
 */
int32_t minlines_run(const char *op, const char *args_json, char **out_json);

/**
 * Release a string handed out by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and be released at most once.
 */
void minlines_string_free(char *s);

#endif  /* MINLINES_H */
