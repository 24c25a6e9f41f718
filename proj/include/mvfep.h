/* Copyright 2026 The mvfep Authors
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

/* C interface of the mvfep shared library.
 *
 * The library embeds finite partial subalgebras of linearly ordered
 * MV-algebras into finite chains (and finite MV-algebras into powers of
 * finite chains) by exact rational linear programming, with Farkas
 * certificates for infeasibility and built-in verification of every
 * produced witness.
 *
 * All functions are synchronous and thread-compatible: distinct handles may
 * be used from distinct threads. Inputs and outputs are JSON documents;
 * see the README for the formats.
 */

#ifndef MVFEP_H
#define MVFEP_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes in the bundled CLI. */
typedef enum mvfep_status {
  MVFEP_OK = 0,
  MVFEP_ERROR = 1,             /* internal or unclassified error */
  MVFEP_PARSE_ERROR = 2,       /* malformed or invalid input */
  MVFEP_VERIFY_ERROR = 3,      /* a witness bundle failed verification */
  MVFEP_RESOURCE_ERROR = 4,    /* a configured resource cap was exceeded */
  MVFEP_CERTIFICATE_ERROR = 5  /* infeasibility certificate on an MV oracle */
} mvfep_status;

/* A finite MV-algebra parsed from its JSON table form. */
typedef struct mvfep_algebra mvfep_algebra;

/* Result of a command: a JSON witness bundle, or an error message. */
typedef struct mvfep_result mvfep_result;

/* Default cap on solver rows; pass it when no override is wanted. */
#define MVFEP_DEFAULT_ROW_CAP 200000L

/* Library version string, static storage. */
const char* mvfep_version(void);

/* Message of the most recent failing constructor call on this thread. */
const char* mvfep_last_error(void);

/* Parses {"size", "zero", "neg", "oplus", "names"?}. Returns NULL on
 * failure; consult mvfep_last_error(). */
mvfep_algebra* mvfep_algebra_parse(const char* json);
void mvfep_algebra_free(mvfep_algebra* alg);
int mvfep_algebra_size(const mvfep_algebra* alg);

/* Commands. Every call yields a result handle (unless allocation itself
 * fails); inspect mvfep_result_status for the outcome. The returned bundle
 * is self-contained: mvfep_run_verify can re-check it without re-running
 * any solver. */
mvfep_result* mvfep_run_axioms(const mvfep_algebra* alg);
mvfep_result* mvfep_run_filters(const mvfep_algebra* alg, const char* mode);
mvfep_result* mvfep_run_quotient(const mvfep_algebra* alg, int filter_id);
mvfep_result* mvfep_run_embed(const mvfep_algebra* alg, long row_cap);
mvfep_result* mvfep_run_embed_chain(const char* oracle, const char* elements,
                                    long row_cap);
mvfep_result* mvfep_run_farkas(const char* system_json, long row_cap);
mvfep_result* mvfep_run_verify(const char* bundle_json);

mvfep_status mvfep_result_status(const mvfep_result* result);
/* JSON text of the bundle; NULL when the command failed before producing
 * output. Owned by the result handle. */
const char* mvfep_result_json(const mvfep_result* result);
/* One-line human-readable summary, or the error message on failure. */
const char* mvfep_result_summary(const mvfep_result* result);
void mvfep_result_free(mvfep_result* result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MVFEP_H */
