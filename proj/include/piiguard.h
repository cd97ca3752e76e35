/*
 * (C) Copyright 2026 piiguard contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/* Stable C ABI over the piiguard engine.
 *
 * Conventions:
 *   - Every function returning int yields PIIGUARD_OK or an error code;
 *     piiguard_last_error() describes the most recent failure on the
 *     calling thread.
 *   - All strings are UTF-8. Output strings (char**) are heap-allocated
 *     and must be released with piiguard_string_free().
 *   - A text length of PIIGUARD_NUL_TERMINATED means strlen(text).
 *   - Handles are opaque; a NULL handle argument is an argument error.
 *     piiguard_engine is immutable after creation and safe to share across
 *     threads. piiguard_suppressions is internally synchronized.
 */
#ifndef PIIGUARD_H
#define PIIGUARD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PIIGUARD_OK 0
#define PIIGUARD_ERR_ARGUMENT 1 /* bad call: NULL handle, invalid UTF-8, ... */
#define PIIGUARD_ERR_PARSE 2    /* malformed JSON/JSONL/TSV input */
#define PIIGUARD_ERR_CONFIG 3   /* unusable configuration or data files */
#define PIIGUARD_ERR_IO 4       /* filesystem failure */
#define PIIGUARD_ERR_INTERNAL 5 /* invariant breach; always a bug, report it */

#define PIIGUARD_NUL_TERMINATED ((size_t)-1)

/* Values of the verdict out-parameters. */
#define PIIGUARD_VERDICT_PASS 0
#define PIIGUARD_VERDICT_MASKED 1
#define PIIGUARD_VERDICT_BLOCKED 2

typedef struct piiguard_engine piiguard_engine;
typedef struct piiguard_suppressions piiguard_suppressions;

/* Static version string; do not free. */
const char* piiguard_version(void);

/* Message of the last failed call on this thread; empty after success.
 * Valid until the next piiguard call on the same thread; do not free. */
const char* piiguard_last_error(void);

void piiguard_string_free(char* s);

/* config_json: engine options (see docs/FORMATS.md), NULL for defaults
 * (locale "en", gdpr-default template, bundled data). */
int piiguard_engine_new(const char* config_json, piiguard_engine** out);
void piiguard_engine_free(piiguard_engine* engine);

/* Full pipeline over one document. report_json receives the scan report;
 * verdict (nullable) receives a PIIGUARD_VERDICT_* value. */
int piiguard_scan(const piiguard_engine* engine, const char* text,
                  size_t text_len, const char* doc_id, char** report_json,
                  int* verdict);

/* Redaction only: masked_text receives the document with every masked
 * mention replaced by its type placeholder, or NULL when the document is
 * blocked outright. */
int piiguard_mask(const piiguard_engine* engine, const char* text,
                  size_t text_len, char** masked_text, int* verdict);

/* Context fingerprint of one span, as used by the suppression store.
 * [span_start, span_end) are byte offsets into text; entity_type is the
 * canonical type name, e.g. "Person". */
int piiguard_fingerprint(const char* text, size_t text_len, size_t span_start,
                         size_t span_end, const char* entity_type,
                         char** fingerprint);

/* path NULL opens an in-memory store; otherwise entries are loaded from and
 * appended to the JSONL file at path (created on first write). */
int piiguard_suppressions_open(const char* path, piiguard_suppressions** out);
void piiguard_suppressions_free(piiguard_suppressions* store);

/* Records reviewer feedback. timestamp NULL stamps the current UTC time;
 * added (nullable) receives 1 if the fingerprint was new, 0 on duplicate. */
int piiguard_suppressions_add(piiguard_suppressions* store,
                              const char* fingerprint, const char* reviewer,
                              const char* timestamp, int* added);
int piiguard_suppressions_contains(const piiguard_suppressions* store,
                                   const char* fingerprint, int* found);
int piiguard_suppressions_size(const piiguard_suppressions* store,
                               size_t* size);

/* Reads a pull-request export: either a directory tree (binary files are
 * skipped) or a JSON export file. pr_json receives the normalized export. */
int piiguard_pr_ingest(const char* source_path, char** pr_json);

/* Scans every file of a PR export and applies suppressions (NULL means
 * none). triage_json receives the triage report; flagged (nullable)
 * receives 1 when unsuppressed violations remain. */
int piiguard_triage(const piiguard_engine* engine,
                    const piiguard_suppressions* suppressions,
                    const char* pr_json, char** triage_json, int* flagged);

/* Detection quality against a gold corpus (JSONL, one record per line).
 * match_mode is "exact" or "overlap". metrics_json receives per-type,
 * micro, and macro precision/recall/F1. */
int piiguard_eval(const piiguard_engine* engine, const char* corpus_jsonl,
                  const char* match_mode, char** metrics_json);

/* Same scoring for externally produced predictions. */
int piiguard_eval_predictions(const char* corpus_jsonl,
                              const char* predictions_jsonl,
                              const char* match_mode, char** metrics_json);

/* Latency distribution of repeated scans over the corpus documents.
 * iterations below 30 are raised to 30; three warm-up scans per document
 * are excluded. */
int piiguard_bench(const piiguard_engine* engine, const char* corpus_jsonl,
                   size_t iterations, char** latency_json);

/* Deterministic synthetic corpus. spec_json NULL uses the built-in mix
 * (six locales, 30% near-miss negatives); corpus_jsonl receives one
 * annotated record per line. */
int piiguard_generate_corpus(uint64_t seed, const char* spec_json,
                             char** corpus_jsonl);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PIIGUARD_H */
