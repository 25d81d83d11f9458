/* Copyright 2026 The chas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the chas continuous-authentication library.
 *
 * Every function returns CHAS_OK (0) or one of the CHAS_E_* codes below;
 * chas_last_error_message() returns a thread-local description of the
 * most recent failure. Strings returned through char** out-parameters
 * are owned by the caller and must be released with chas_string_free().
 */

#ifndef CHAS_H_
#define CHAS_H_

#include <stddef.h>
#include <stdint.h>

#ifndef CHAS_API
#define CHAS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. The CLI uses the same values as process exit codes. */
#define CHAS_OK 0
#define CHAS_E_IO 1
#define CHAS_E_PARSE 2
#define CHAS_E_CONFIG 3
#define CHAS_E_ENROLL_INSUFFICIENT 4
#define CHAS_E_CONFIG_MISMATCH 5
#define CHAS_E_EVAL_NEEDS_IMPOSTORS 6
#define CHAS_E_INVALID_SPEC 7
#define CHAS_E_INVALID_ARGUMENT 8
#define CHAS_E_NUMERIC 9
#define CHAS_E_INTERNAL 10

typedef struct chas_config_s chas_config_t;
typedef struct chas_template_s chas_template_t;
typedef struct chas_session_s chas_session_t;

CHAS_API const char* chas_version(void);

/* Static name of an error code ("CONFIG_MISMATCH", ...). */
CHAS_API const char* chas_strerror(int code);

/* Thread-local message for the most recent failing call. The pointer
 * stays valid until the next failing call on the same thread. */
CHAS_API const char* chas_last_error_message(void);

CHAS_API void chas_string_free(char* s);

/* ---- configuration ---- */

CHAS_API chas_config_t* chas_config_default(void);

/* Loads a JSON config file; returns NULL on failure (see
 * chas_last_error_message). */
CHAS_API chas_config_t* chas_config_load(const char* path);

/* Merges a JSON fragment over the config, e.g.
 * "{\"preprocess\":{\"rate_hz\":100}}". */
CHAS_API int chas_config_merge(chas_config_t* cfg, const char* json_text);

CHAS_API int chas_config_set_seed(chas_config_t* cfg, uint64_t seed);

/* Serialized config as JSON text. */
CHAS_API int chas_config_dump(const chas_config_t* cfg, char** json_out);

CHAS_API void chas_config_free(chas_config_t* cfg);

/* ---- pipeline commands ---- */

/* Enrolls a user from a raw gesture log ("jsonl" or "csv") and writes
 * the template file. summary_out (optional) receives a JSON summary:
 * gesture counts per kind/channel and the selected model sizes. */
CHAS_API int chas_enroll_file(const chas_config_t* cfg, const char* log_path,
                              const char* format, const char* template_path,
                              char** summary_out);

/* Scores a log against a stored template with decision window size k.
 * threshold_spec is "balanced", "zero-frr", "zero-far", or a numeric
 * literal. Decision records (JSON, one per gesture) go to
 * decisions_path, or into the summary when decisions_path is NULL. */
CHAS_API int chas_score_file(const chas_config_t* cfg,
                             const char* template_path, const char* log_path,
                             const char* format, int k,
                             const char* threshold_spec,
                             const char* decisions_path, char** summary_out);

/* Runs the FAR/FRR/EER protocol over every *.jsonl log in corpus_dir
 * and writes CSV/SVG reports into out_dir. */
CHAS_API int chas_evaluate_dir(const chas_config_t* cfg,
                               const char* corpus_dir, const char* out_dir,
                               char** summary_out);

/* Renders a synthetic labeled corpus from a population spec file. */
CHAS_API int chas_synth_corpus(const char* spec_path, const char* out_dir,
                               uint64_t seed, char** summary_out);

/* ---- templates ---- */

CHAS_API chas_template_t* chas_template_load(const char* path);
CHAS_API int chas_template_summary(const chas_template_t* tpl, char** json_out);
CHAS_API void chas_template_free(chas_template_t* tpl);

/* ---- streaming sessions ---- */

/* A session consumes raw JSONL event lines as they arrive and emits one
 * decision per completed gesture; threshold_spec as in chas_score_file.
 * Feed lines with chas_session_feed, then drain decisions with
 * chas_session_poll; call chas_session_finish once the stream ends to
 * flush gestures still waiting for their trailing sensor window. */
CHAS_API chas_session_t* chas_session_open(const chas_config_t* cfg,
                                           const chas_template_t* tpl, int k,
                                           const char* threshold_spec);

CHAS_API int chas_session_feed(chas_session_t* session, const char* jsonl_line);

/* Returns the next decision as a JSON line, or NULL when none is
 * pending. Free with chas_string_free. */
CHAS_API char* chas_session_poll(chas_session_t* session);

CHAS_API int chas_session_finish(chas_session_t* session);

CHAS_API void chas_session_free(chas_session_t* session);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHAS_H_ */
