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

#include "readorder/readorder.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "readorder/document.h"
#include "readorder/error.h"
#include "readorder/evaluation.h"
#include "readorder/linguistic.h"
#include "readorder/spatial_order.h"

struct ro_document {
  readorder::Document doc;
  std::vector<std::string> warnings;
};

struct ro_edges {
  std::vector<std::pair<readorder::BlockId, readorder::BlockId>> edges;
};

struct ro_orders {
  std::vector<readorder::ReadingOrder> orders;
  bool truncated = false;
  bool filter_skipped = false;
  std::vector<std::string> warnings;
};

struct ro_linguistics {
  readorder::Lexicon lexicon;
  readorder::AbbreviationList abbrevs;
};

namespace {

thread_local std::string g_last_error;

ro_status ToStatus(readorder::ErrorCode code) {
  using readorder::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return RO_ERR_PARSE;
    case ErrorCode::kIo: return RO_ERR_IO;
    case ErrorCode::kDuplicateId: return RO_ERR_DUPLICATE_ID;
    case ErrorCode::kInvalidBox: return RO_ERR_INVALID_BOX;
    case ErrorCode::kUnknownId: return RO_ERR_UNKNOWN_ID;
    case ErrorCode::kNotPermutation: return RO_ERR_NOT_PERMUTATION;
    case ErrorCode::kEmptyBlock: return RO_ERR_EMPTY_BLOCK;
    case ErrorCode::kInvalidArgument: return RO_ERR_INVALID_ARGUMENT;
  }
  return RO_ERR_INTERNAL;
}

ro_status Fail(ro_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
ro_status Guard(Fn&& fn) {
  try {
    fn();
    return RO_OK;
  } catch (const readorder::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(RO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(RO_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(RO_ERR_INTERNAL, "unknown error");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

readorder::RuleSet ToRules(ro_rules rules) {
  switch (rules) {
    case RO_RULES_GENERAL: return readorder::RuleSet::kGeneral;
    case RO_RULES_COLUMN: return readorder::RuleSet::kColumnAware;
  }
  throw readorder::Error(readorder::ErrorCode::kInvalidArgument, "unknown rule set");
}

void Require(bool condition, const char* what) {
  if (!condition) {
    throw readorder::Error(readorder::ErrorCode::kInvalidArgument, what);
  }
}

const char* At(const std::vector<std::string>& v, size_t i) {
  return i < v.size() ? v[i].c_str() : nullptr;
}

}  // namespace

extern "C" {

const char* ro_version(void) { return "1.0.0"; }

const char* ro_last_error(void) { return g_last_error.c_str(); }

const char* ro_status_name(ro_status status) {
  switch (status) {
    case RO_OK: return "ok";
    case RO_ERR_PARSE: return "parse error";
    case RO_ERR_IO: return "I/O error";
    case RO_ERR_DUPLICATE_ID: return "duplicate id";
    case RO_ERR_INVALID_BOX: return "invalid box";
    case RO_ERR_UNKNOWN_ID: return "unknown id";
    case RO_ERR_NOT_PERMUTATION: return "not a permutation";
    case RO_ERR_EMPTY_BLOCK: return "empty block";
    case RO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ro_string_free(char* s) { std::free(s); }

ro_status ro_document_load(const char* blocks_path, const char* text_path,
                           const char* order_path, ro_document** out) {
  return Guard([&] {
    Require(blocks_path != nullptr && out != nullptr, "blocks_path and out are required");
    *out = nullptr;
    auto handle = std::make_unique<ro_document>();
    handle->doc = readorder::LoadDocument(blocks_path, text_path ? text_path : "",
                                          order_path ? order_path : "", &handle->warnings);
    *out = handle.release();
  });
}

ro_status ro_document_parse(const char* reference, const char* blocks, ro_document** out) {
  return Guard([&] {
    Require(reference != nullptr && blocks != nullptr && out != nullptr,
            "reference, blocks and out are required");
    *out = nullptr;
    auto handle = std::make_unique<ro_document>();
    handle->doc = readorder::Document(reference,
                                      readorder::ParseBlocks(std::string_view(blocks)));
    *out = handle.release();
  });
}

ro_status ro_document_attach_text(ro_document* doc, const char* text_table) {
  return Guard([&] {
    Require(doc != nullptr && text_table != nullptr, "doc and text_table are required");
    std::istringstream in{std::string(text_table)};
    auto table = readorder::ParseTextTable(in);
    auto truth = doc->doc.ground_truth();
    readorder::Document updated = readorder::AttachText(
        doc->doc.reference(), doc->doc.objects(), table, &doc->warnings);
    if (truth) updated.SetGroundTruth(*truth);
    doc->doc = std::move(updated);
  });
}

ro_status ro_document_set_ground_truth(ro_document* doc, const int64_t* ids, size_t count) {
  return Guard([&] {
    Require(doc != nullptr && (ids != nullptr || count == 0), "doc and ids are required");
    doc->doc.SetGroundTruth(readorder::ReadingOrder(ids, ids + count));
  });
}

void ro_document_free(ro_document* doc) { delete doc; }

size_t ro_document_object_count(const ro_document* doc) {
  return doc ? doc->doc.objects().size() : 0;
}

size_t ro_document_text_block_count(const ro_document* doc) {
  return doc ? doc->doc.TextBlocks().size() : 0;
}

size_t ro_document_warning_count(const ro_document* doc) {
  return doc ? doc->warnings.size() : 0;
}

const char* ro_document_warning(const ro_document* doc, size_t index) {
  return doc ? At(doc->warnings, index) : nullptr;
}

ro_status ro_relations(const ro_document* doc, ro_rules rules, int all_blocks, ro_edges** out) {
  return Guard([&] {
    Require(doc != nullptr && out != nullptr, "doc and out are required");
    *out = nullptr;
    readorder::GraphOptions options;
    options.rules = ToRules(rules);
    options.all_blocks = all_blocks != 0;
    auto handle = std::make_unique<ro_edges>();
    handle->edges = readorder::BuildPrecedenceGraph(doc->doc, options).Edges();
    *out = handle.release();
  });
}

size_t ro_edges_count(const ro_edges* edges) { return edges ? edges->edges.size() : 0; }

ro_status ro_edges_get(const ro_edges* edges, size_t index, int64_t* from, int64_t* to) {
  if (edges == nullptr || index >= edges->edges.size()) {
    return Fail(RO_ERR_INVALID_ARGUMENT, "edge index out of range");
  }
  if (from) *from = edges->edges[index].first;
  if (to) *to = edges->edges[index].second;
  return RO_OK;
}

void ro_edges_free(ro_edges* edges) { delete edges; }

ro_status ro_spatial_orders(const ro_document* doc, ro_rules rules, size_t cap,
                            ro_orders** out) {
  return Guard([&] {
    Require(doc != nullptr && out != nullptr, "doc and out are required");
    *out = nullptr;
    Require(cap > 0, "cap must be positive");
    readorder::GraphOptions options;
    options.rules = ToRules(rules);
    readorder::Enumeration e =
        readorder::EnumerateOrders(readorder::BuildPrecedenceGraph(doc->doc, options), cap);
    auto handle = std::make_unique<ro_orders>();
    handle->orders = std::move(e.orders);
    handle->truncated = e.truncated;
    if (e.truncated) {
      handle->warnings.push_back("enumeration stopped at " + std::to_string(cap) + " orders");
    }
    *out = handle.release();
  });
}

ro_status ro_check_order(const ro_document* doc, ro_rules rules, const int64_t* ids,
                         size_t count, int* admissible) {
  return Guard([&] {
    Require(doc != nullptr && admissible != nullptr && (ids != nullptr || count == 0),
            "doc, ids and admissible are required");
    readorder::GraphOptions options;
    options.rules = ToRules(rules);
    *admissible = readorder::CheckOrder(readorder::ReadingOrder(ids, ids + count),
                                        readorder::BuildPrecedenceGraph(doc->doc, options))
                      ? 1
                      : 0;
  });
}

size_t ro_orders_count(const ro_orders* orders) { return orders ? orders->orders.size() : 0; }

size_t ro_orders_length(const ro_orders* orders, size_t index) {
  return orders && index < orders->orders.size() ? orders->orders[index].size() : 0;
}

int64_t ro_orders_at(const ro_orders* orders, size_t index, size_t position) {
  if (orders == nullptr || index >= orders->orders.size() ||
      position >= orders->orders[index].size()) {
    return 0;
  }
  return orders->orders[index][position];
}

int ro_orders_truncated(const ro_orders* orders) { return orders && orders->truncated ? 1 : 0; }

int ro_orders_filter_skipped(const ro_orders* orders) {
  return orders && orders->filter_skipped ? 1 : 0;
}

size_t ro_orders_warning_count(const ro_orders* orders) {
  return orders ? orders->warnings.size() : 0;
}

const char* ro_orders_warning(const ro_orders* orders, size_t index) {
  return orders ? At(orders->warnings, index) : nullptr;
}

void ro_orders_free(ro_orders* orders) { delete orders; }

ro_status ro_linguistics_load(const char* lexicon_path, const char* abbrev_path,
                              ro_linguistics** out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    *out = nullptr;
    auto handle = std::make_unique<ro_linguistics>();
    handle->lexicon = readorder::Lexicon::LoadFile(
        lexicon_path ? lexicon_path : readorder::DefaultLexiconPath());
    handle->abbrevs = readorder::AbbreviationList::LoadFile(
        abbrev_path ? abbrev_path : readorder::DefaultAbbreviationPath());
    *out = handle.release();
  });
}

void ro_linguistics_free(ro_linguistics* ling) { delete ling; }

ro_status ro_filter_orders(const ro_document* doc, const ro_linguistics* ling,
                           const ro_orders* in, ro_orders** out) {
  return Guard([&] {
    Require(doc != nullptr && ling != nullptr && in != nullptr && out != nullptr,
            "doc, ling, in and out are required");
    *out = nullptr;
    readorder::FilterResult r =
        readorder::FilterOrders(in->orders, doc->doc, ling->lexicon, ling->abbrevs);
    auto handle = std::make_unique<ro_orders>();
    handle->orders = std::move(r.orders);
    handle->truncated = in->truncated;
    handle->filter_skipped = r.skipped;
    handle->warnings = in->warnings;
    handle->warnings.insert(handle->warnings.end(), r.warnings.begin(), r.warnings.end());
    *out = handle.release();
  });
}

char* ro_possible_readings(unsigned n_text_blocks) {
  return CopyString(readorder::PossibleReadings(n_text_blocks).ToString());
}

ro_status ro_compute_utility(const uint64_t* n_spatial, const uint32_t* n_text_blocks,
                             const int* correct, size_t count, ro_utility* out) {
  return Guard([&] {
    Require(n_spatial != nullptr && n_text_blocks != nullptr && correct != nullptr &&
                out != nullptr,
            "all arrays and out are required");
    std::vector<readorder::EvalRecord> records(count);
    for (size_t i = 0; i < count; ++i) {
      records[i].n_text_blocks = n_text_blocks[i];
      records[i].n_possible = readorder::PossibleReadings(n_text_blocks[i]);
      records[i].n_spatial = n_spatial[i];
      Require(correct[i] >= -1 && correct[i] <= 1, "correct entries must be -1, 0 or 1");
      if (correct[i] >= 0) records[i].correct = correct[i] != 0;
    }
    readorder::UtilityReport u = readorder::ComputeUtility(records);
    *out = ro_utility{u.sum, u.mean, u.median};
  });
}

ro_status ro_evaluate_directory(const char* dir, ro_rules rules, ro_aggregation aggregation,
                                size_t cap, int timing, const ro_linguistics* ling,
                                char** report, char** warnings) {
  return Guard([&] {
    Require(dir != nullptr && report != nullptr, "dir and report are required");
    *report = nullptr;
    if (warnings != nullptr) *warnings = nullptr;
    Require(cap > 0, "cap must be positive");
    Require(aggregation == RO_AGGREGATION_MEAN || aggregation == RO_AGGREGATION_SUM,
            "unknown aggregation");
    std::unique_ptr<ro_linguistics> owned;
    if (ling == nullptr) {
      ro_linguistics* loaded = nullptr;
      ro_status s = ro_linguistics_load(nullptr, nullptr, &loaded);
      if (s != RO_OK) throw readorder::Error(readorder::ErrorCode::kIo, g_last_error);
      owned.reset(loaded);
      ling = loaded;
    }
    readorder::PipelineOptions options;
    options.graph.rules = ToRules(rules);
    options.cap = cap;
    std::vector<readorder::PipelineResult> results =
        readorder::EvaluateCorpus(dir, options, ling->lexicon, ling->abbrevs);

    std::vector<readorder::EvalRecord> records;
    std::string diagnostics;
    for (const readorder::PipelineResult& r : results) {
      records.push_back(r.record);
      for (const std::string& w : r.warnings) diagnostics += r.record.reference + ": " + w + "\n";
    }
    if (records.empty()) {
      throw readorder::Error(readorder::ErrorCode::kIo,
                             std::string("no .blocks files in ") + dir);
    }
    readorder::UtilityReport u = readorder::ComputeUtility(
        records, aggregation == RO_AGGREGATION_SUM ? readorder::Aggregation::kSum
                                                   : readorder::Aggregation::kMean);
    readorder::ReportOptions report_options;
    report_options.timing = timing != 0;
    std::string text = readorder::FormatReport(records, u, report_options);
    *report = CopyString(text);
    if (warnings != nullptr) *warnings = CopyString(diagnostics);
  });
}

}  // extern "C"
