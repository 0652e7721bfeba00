#ifndef QAMAR_H
#define QAMAR_H

/* Generated by cbindgen from qamar-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by fallible functions.
 */
typedef enum QamarStatus {
  QamarStatus_Ok = 0,
  QamarStatus_NullArgument = 1,
  QamarStatus_InvalidUtf8 = 2,
  QamarStatus_LexiconError = 3,
} QamarStatus;

/**
 * Opaque analyzer handle.
 */
typedef struct QamarAnalyzer QamarAnalyzer;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Status code of the most recent call on this thread.
 */
enum QamarStatus qamar_last_status(void);

/**
 * Description of the most recent error on this thread, or null when the
 * last call succeeded. The returned string must be freed with
 * [`qamar_string_free`].
 */
char *qamar_last_error(void);

/**
 * Create an analyzer over the compiled-in seed lexicon. Never fails.
 */
struct QamarAnalyzer *qamar_analyzer_new(void);

/**
 * Create an analyzer from a lexicon directory.
 *
 * Returns null on failure; consult [`qamar_last_error`].
 *
 * # Safety
 * `lexicon_dir` must be a valid NUL-terminated UTF-8 path or null (null
 * falls back to the compiled-in seed).
 */
struct QamarAnalyzer *qamar_analyzer_new_with_lexicon(const char *lexicon_dir);

/**
 * Release an analyzer handle.
 *
 * # Safety
 * `analyzer` must be a pointer returned by one of the constructors, not
 * yet freed; null is ignored.
 */
void qamar_analyzer_free(struct QamarAnalyzer *analyzer);

/**
 * Analyze text and return one TSV row per token (columns: surface, tag,
 * category, lemma, root, pattern, features, flags). Returns null on
 * failure. The result must be freed with [`qamar_string_free`].
 *
 * # Safety
 * `analyzer` must be a live handle and `text` a NUL-terminated UTF-8
 * string.
 */
char *qamar_analyze_tsv(const struct QamarAnalyzer *analyzer, const char *text);

/**
 * Analyze text and return a JSON array of token records. Returns null
 * on failure. The result must be freed with [`qamar_string_free`].
 *
 * # Safety
 * `analyzer` must be a live handle and `text` a NUL-terminated UTF-8
 * string.
 */
char *qamar_analyze_json(const struct QamarAnalyzer *analyzer, const char *text);

/**
 * Number of tokens the analyzer finds in `text`; `-1` on error.
 *
 * # Safety
 * `analyzer` must be a live handle and `text` a NUL-terminated UTF-8
 * string.
 */
int64_t qamar_token_count(const struct QamarAnalyzer *analyzer, const char *text);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned by a qamar function and not
 * yet freed; null is ignored.
 */
void qamar_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QAMAR_H */
