/* Copyright 2023 The Authors.
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

#ifndef TROPBUNDLE_TROPBUNDLE_H_
#define TROPBUNDLE_TROPBUNDLE_H_

#include <stddef.h>

#if defined(_WIN32)
#define TB_API __declspec(dllexport)
#else
#define TB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. They double as the CLI exit codes. */
typedef enum {
  TB_OK = 0,
  TB_ERR_DOMAIN = 1,    /* A precondition of the mathematics failed. */
  TB_ERR_USAGE = 2,
  TB_ERR_NOT_FOUND = 3,
  TB_ERR_PARSE = 4,
  TB_ERR_INVALID = 5,   /* Well-formed input violating an invariant. */
  TB_ERR_LIMIT = 6,
  TB_ERR_INTERNAL = 7
} tb_status;

/* A parsed JSON input document: a bundle, a lattice or a realization. */
typedef struct tb_document tb_document;

TB_API const char* tb_version(void);

/* Message of the most recent failure on the calling thread. */
TB_API const char* tb_last_error(void);

TB_API int tb_document_parse(const char* text, tb_document** out);
TB_API int tb_document_load(const char* path, tb_document** out);
TB_API void tb_document_free(tb_document* doc);

/* Parses the document as a bundle and writes its canonical JSON. */
TB_API int tb_bundle_canonical(const tb_document* doc, char** json_out);
TB_API int tb_bundle_rank(const tb_document* doc, int* rank_out);

/* Runs a subcommand. options_json may be NULL or an object with any of
 * "z", "point" (lists of rationals or "inf"), "a" (integers) and "flat"
 * (labels). On TB_OK, *report_out holds the report and *negative is 1 when
 * the answer is negative. */
TB_API int tb_execute(const char* command, const tb_document* const* inputs,
                      size_t n_inputs, const char* options_json,
                      char** report_out, int* negative);

TB_API void tb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TROPBUNDLE_TROPBUNDLE_H_ */
