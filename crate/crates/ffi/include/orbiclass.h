/* C interface to the orbiclass rational-map classifier. */

#ifndef ORBICLASS_H
#define ORBICLASS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define ORBICLASS_OK 0

/**
 * The expression failed to parse or lower (bad syntax, division by a zero
 * constant, non-integer exponent).
 */
#define ORBICLASS_ERR_PARSE 1

/**
 * A required pointer argument was null.
 */
#define ORBICLASS_ERR_NULL 2

/**
 * The input string was not valid UTF-8.
 */
#define ORBICLASS_ERR_UTF8 3

/**
 * The operation is undefined for this map (e.g. classifying a constant).
 */
#define ORBICLASS_ERR_UNSUPPORTED 4

/**
 * An internal invariant was violated.
 */
#define ORBICLASS_ERR_INTERNAL 5

/**
 * Opaque handle around a canonical rational map.
 */
typedef struct OrbiclassMap OrbiclassMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a rational-function expression in z into a new map handle.
 *
 * # Safety
 * `src` must be a valid NUL-terminated string; `out` must be a valid
 * pointer to receive the handle.
 */
int orbiclass_map_parse(const char *src, struct OrbiclassMap **out);

/**
 * Releases a map handle. Null is a no-op.
 *
 * # Safety
 * `map` must be null or a handle obtained from this library that has not
 * been freed yet.
 */
void orbiclass_map_free(struct OrbiclassMap *map);

/**
 * Degree of the map, or -1 on a null handle.
 *
 * # Safety
 * `map` must be null or a live handle from this library.
 */
int orbiclass_map_degree(const struct OrbiclassMap *map);

/**
 * Full classification report as a JSON string (same schema as the CLI).
 *
 * # Safety
 * `map` must be a live handle; `out` must be valid to receive the string.
 */
int orbiclass_classify_json(const struct OrbiclassMap *map, char **out);

/**
 * Branch data as a JSON string: degree plus partitions over critical values.
 *
 * # Safety
 * `map` must be a live handle; `out` must be valid to receive the string.
 */
int orbiclass_passport_json(const struct OrbiclassMap *map, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string obtained from this library that has not
 * been freed yet.
 */
void orbiclass_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBICLASS_H */
