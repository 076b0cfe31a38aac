// Copyright 2026 The readorder Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the reading-order library. Every object is an opaque
 * handle released with its matching *_free function. Functions returning
 * ro_status leave a message for ro_last_error() on failure; the message is
 * per thread and valid until the next failing call on that thread. */

#ifndef READORDER_READORDER_H_
#define READORDER_READORDER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(READORDER_BUILDING_LIBRARY)
#    define READORDER_API __declspec(dllexport)
#  else
#    define READORDER_API __declspec(dllimport)
#  endif
#else
#  define READORDER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ro_status {
  RO_OK = 0,
  RO_ERR_PARSE = 1,
  RO_ERR_IO = 2,
  RO_ERR_DUPLICATE_ID = 3,
  RO_ERR_INVALID_BOX = 4,
  RO_ERR_UNKNOWN_ID = 5,
  RO_ERR_NOT_PERMUTATION = 6,
  RO_ERR_EMPTY_BLOCK = 7,
  RO_ERR_INVALID_ARGUMENT = 8,
  RO_ERR_INTERNAL = 9
} ro_status;

typedef enum ro_rules {
  RO_RULES_GENERAL = 0,
  RO_RULES_COLUMN = 1
} ro_rules;

typedef enum ro_aggregation {
  RO_AGGREGATION_MEAN = 0,
  RO_AGGREGATION_SUM = 1
} ro_aggregation;

typedef struct ro_document ro_document;
typedef struct ro_edges ro_edges;
typedef struct ro_orders ro_orders;
typedef struct ro_linguistics ro_linguistics;

READORDER_API const char* ro_version(void);
READORDER_API const char* ro_last_error(void);
READORDER_API const char* ro_status_name(ro_status status);
READORDER_API void ro_string_free(char* s);

/* ---- documents ---------------------------------------------------------- */

/* text_path and order_path may be NULL. */
READORDER_API ro_status ro_document_load(const char* blocks_path, const char* text_path,
                                         const char* order_path, ro_document** out);
/* Parses a block listing held in memory. */
READORDER_API ro_status ro_document_parse(const char* reference, const char* blocks,
                                          ro_document** out);
/* Attaches text given in the sidecar format (ID<TAB>escaped-text lines). */
READORDER_API ro_status ro_document_attach_text(ro_document* doc, const char* text_table);
READORDER_API ro_status ro_document_set_ground_truth(ro_document* doc, const int64_t* ids,
                                                     size_t count);
READORDER_API void ro_document_free(ro_document* doc);

READORDER_API size_t ro_document_object_count(const ro_document* doc);
READORDER_API size_t ro_document_text_block_count(const ro_document* doc);
READORDER_API size_t ro_document_warning_count(const ro_document* doc);
READORDER_API const char* ro_document_warning(const ro_document* doc, size_t index);

/* ---- spatial analysis --------------------------------------------------- */

/* all_blocks != 0 uses every object instead of running-text blocks only. */
READORDER_API ro_status ro_relations(const ro_document* doc, ro_rules rules, int all_blocks,
                                     ro_edges** out);
READORDER_API size_t ro_edges_count(const ro_edges* edges);
READORDER_API ro_status ro_edges_get(const ro_edges* edges, size_t index, int64_t* from,
                                     int64_t* to);
READORDER_API void ro_edges_free(ro_edges* edges);

READORDER_API ro_status ro_spatial_orders(const ro_document* doc, ro_rules rules, size_t cap,
                                          ro_orders** out);
/* *admissible is set to 1 or 0. Fails with RO_ERR_NOT_PERMUTATION when ids
 * are not a permutation of the document's text blocks. */
READORDER_API ro_status ro_check_order(const ro_document* doc, ro_rules rules,
                                       const int64_t* ids, size_t count, int* admissible);

READORDER_API size_t ro_orders_count(const ro_orders* orders);
READORDER_API size_t ro_orders_length(const ro_orders* orders, size_t index);
READORDER_API int64_t ro_orders_at(const ro_orders* orders, size_t index, size_t position);
READORDER_API int ro_orders_truncated(const ro_orders* orders);
/* 1 when linguistic filtering did not run because text was missing. */
READORDER_API int ro_orders_filter_skipped(const ro_orders* orders);
READORDER_API size_t ro_orders_warning_count(const ro_orders* orders);
READORDER_API const char* ro_orders_warning(const ro_orders* orders, size_t index);
READORDER_API void ro_orders_free(ro_orders* orders);

/* ---- linguistic filtering ----------------------------------------------- */

/* NULL paths select the bundled lexicon and abbreviation list. */
READORDER_API ro_status ro_linguistics_load(const char* lexicon_path, const char* abbrev_path,
                                            ro_linguistics** out);
READORDER_API void ro_linguistics_free(ro_linguistics* ling);
READORDER_API ro_status ro_filter_orders(const ro_document* doc, const ro_linguistics* ling,
                                         const ro_orders* in, ro_orders** out);

/* ---- evaluation --------------------------------------------------------- */

typedef struct ro_utility {
  double sum;
  double mean;
  double median;
} ro_utility;

/* n! as text: exact digits up to 20!, scientific notation beyond. */
READORDER_API char* ro_possible_readings(unsigned n_text_blocks);

/* One entry per document; correct[i] is 1, 0, or -1 for unknown. */
READORDER_API ro_status ro_compute_utility(const uint64_t* n_spatial,
                                           const uint32_t* n_text_blocks, const int* correct,
                                           size_t count, ro_utility* out);

/* Runs the pipeline on every *.blocks file in dir and returns the TSV report
 * in *report. ling may be NULL for the bundled data. warnings, when not
 * NULL, receives newline-separated diagnostics. */
READORDER_API ro_status ro_evaluate_directory(const char* dir, ro_rules rules,
                                              ro_aggregation aggregation, size_t cap,
                                              int timing, const ro_linguistics* ling,
                                              char** report, char** warnings);

#ifdef __cplusplus
}
#endif

#endif /* READORDER_READORDER_H_ */
