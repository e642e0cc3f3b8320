/* Copyright 2026 The Wordarea Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the wordarea library.
 *
 * Words live in the free group on a and b; capital letters spell inverses and
 * "a^-3"-style tokens spell powers. Every word here equals the identity in
 * the quotients of interest, and the library computes the exact area: the
 * fewest relator-backed deletions needed to empty the word, where adjacent
 * inverse pairs always cancel for free.
 *
 *   WA_PRESENTATION_TRIVIAL  relators a, b: a deletion takes one letter.
 *   WA_PRESENTATION_POWERS   relators a^k, b^k: a deletion takes a whole
 *                            single-generator, single-sign run.
 *
 * All functions returning wa_status leave a human-readable message for the
 * calling thread in wa_last_error() on failure. Objects come back through
 * out-parameters and are released with their matching wa_*_free call; output
 * parameters are untouched on failure.
 */

#ifndef WORDAREA_WORDAREA_H_
#define WORDAREA_WORDAREA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WA_API __declspec(dllexport)
#else
#define WA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wa_status {
  WA_OK = 0,
  WA_ERR_PARSE = 1,    /* malformed word text */
  WA_ERR_ARGUMENT = 2, /* bad argument (null handle, zero entry, ...) */
  WA_ERR_LIMIT = 3,    /* input exceeds a documented size bound */
  WA_ERR_VERIFY = 4,   /* witness or cross-check failed to validate */
  WA_ERR_INTERNAL = 5
} wa_status;

typedef enum wa_presentation {
  WA_PRESENTATION_TRIVIAL = 0,
  WA_PRESENTATION_POWERS = 1
} wa_presentation;

typedef enum wa_format_style {
  WA_FORMAT_COMPRESSED = 0, /* "aabAAB" */
  WA_FORMAT_CARET = 1       /* "a^2 b a^-2 b^-1" */
} wa_format_style;

typedef struct wa_word wa_word;     /* a parsed word */
typedef struct wa_result wa_result; /* an area computation with witness */
typedef struct wa_oracle wa_oracle; /* a reference solver with its memo */

/* Library version, e.g. "0.1.0". Static storage; do not free. */
WA_API const char* wa_version(void);

/* Message for the most recent failing call on this thread. Static per-thread
 * storage, overwritten by the next failure; do not free. */
WA_API const char* wa_last_error(void);

WA_API const char* wa_status_name(wa_status status);

/* Frees strings returned through char** out-parameters. */
WA_API void wa_string_free(char* text);

/* ---- words ---- */

WA_API wa_status wa_word_parse(const char* text, wa_word** out_word);
WA_API void wa_word_free(wa_word* word);
WA_API int64_t wa_word_length(const wa_word* word);
WA_API wa_status wa_word_format(const wa_word* word, wa_format_style style,
                                char** out_text);
WA_API wa_status wa_word_free_reduce(const wa_word* word, wa_word** out_word);
WA_API wa_status wa_word_invert(const wa_word* word, wa_word** out_word);
/* Cyclic rotation by `offset` letters (0 <= offset <= length). */
WA_API wa_status wa_word_rotate(const wa_word* word, int64_t offset,
                                wa_word** out_word);
/* Canonical cyclic form as JSON: kind (empty|power|alternating), the
 * canonical word, the conjugator, and letter provenance. */
WA_API wa_status wa_word_canonical_json(const wa_word* word, char** out_json);

/* ---- areas ---- */

/* Computes the exact area and a witness. The witness JSON pins 1-based
 * positions: a non-crossing matching of cancelling letters over the word
 * itself (trivial), or a non-crossing single-generator block partition over
 * the canonical word (powers). */
WA_API wa_status wa_area(const wa_word* word, wa_presentation presentation,
                         wa_result** out_result);
WA_API void wa_result_free(wa_result* result);
WA_API int64_t wa_result_area(const wa_result* result);
/* Owned by the result; valid until wa_result_free. */
WA_API const char* wa_result_witness_json(const wa_result* result);
WA_API const char* wa_result_canonical_json(const wa_result* result);
/* Re-validates the stored witness structurally, compiles it to delete/cancel
 * moves, executes them, and checks the word empties at cost equal to the
 * reported area. WA_ERR_VERIFY with a reason on any mismatch. */
WA_API wa_status wa_result_verify(const wa_result* result);

/* ---- reference oracle ---- */

/* max_length/partition_max_length <= 0 pick the defaults (14 and 12). The
 * handle accumulates a memo across calls and is single-threaded. */
WA_API wa_status wa_oracle_create(int32_t max_length,
                                  int32_t partition_max_length,
                                  wa_oracle** out_oracle);
WA_API void wa_oracle_free(wa_oracle* oracle);
/* WA_ERR_LIMIT when the word exceeds the oracle's bound. */
WA_API wa_status wa_oracle_area(wa_oracle* oracle, const wa_word* word,
                                wa_presentation presentation,
                                int64_t* out_area);
WA_API wa_status wa_oracle_partition_min(wa_oracle* oracle,
                                         const wa_word* word,
                                         int64_t* out_area);

/* ---- zero-sum subsequences ---- */

/* Decides whether some nonempty subsequence of the nonzero entries sums to
 * zero. When it does and `witness` is non-null, the ascending 1-based indices
 * of one such subsequence are written to witness[0..count) and their number
 * to *out_witness_len. */
WA_API wa_status wa_zero_subset(const int64_t* entries, size_t count,
                                int32_t* out_exists, size_t* witness,
                                size_t* out_witness_len);

/* Joint report on w = a b^{i_1} a b^{i_2} ... a b^{i_k} over the powers
 * presentation: the area, whether a zero-sum subsequence exists, that the two
 * agree (area <= k exactly when one exists), and that area <= k + 1. */
typedef struct wa_criterion_report {
  int64_t area;
  int32_t subset_exists;
  int32_t area_within_count;
  int32_t equivalence_holds;
  int32_t upper_bound_holds;
} wa_criterion_report;

WA_API wa_status wa_criterion_check(const int64_t* entries, size_t count,
                                    wa_criterion_report* out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WORDAREA_WORDAREA_H_ */
