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

// End-to-end pipeline per document, utility metrics over a corpus, and the
// tab-separated evaluation report.

#ifndef READORDER_EVALUATION_H_
#define READORDER_EVALUATION_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "readorder/document.h"
#include "readorder/linguistic.h"
#include "readorder/spatial_order.h"

namespace readorder {

// n! as an exact integer while it fits (n <= 20), otherwise as a base-10
// logarithm.
struct ReadingCount {
  unsigned n = 0;
  std::optional<std::uint64_t> exact;
  double log10_value = 0.0;

  // Exact digits, or scientific notation such as "5.11e+19".
  std::string ToString() const;
};

ReadingCount PossibleReadings(unsigned n_text_blocks);

struct EvalRecord {
  std::string reference;
  std::size_t n_blocks = 0;
  std::size_t n_text_blocks = 0;
  ReadingCount n_possible;
  std::uint64_t n_spatial = 0;
  // True when n_spatial is only a lower bound (cap hit and the graph is too
  // large to count exactly).
  bool n_spatial_is_lower_bound = false;
  // nullopt when linguistic filtering was skipped.
  std::optional<std::uint64_t> n_final;
  // nullopt when the document has no ground truth.
  std::optional<bool> correct;
  double exec_seconds = 0.0;
  bool truncated = false;
};

// #Spat_admiss / #Poss_r, divided by Correct: +inf when the true order was
// missed, nullopt when correctness is unknown.
std::optional<double> UtilityRatio(const EvalRecord& record);

enum class Aggregation { kMean, kSum };

std::string_view AggregationName(Aggregation a);
std::optional<Aggregation> AggregationFromName(std::string_view name);

struct UtilityReport {
  std::vector<double> ratios;  // records with known correctness, input order
  std::size_t unscored = 0;    // records without ground truth
  double sum = 0.0;
  double mean = 0.0;
  double median = 0.0;
  Aggregation aggregation = Aggregation::kMean;

  double headline() const { return aggregation == Aggregation::kMean ? mean : sum; }
};

// Throws Error(kInvalidArgument) on an empty record list. With no scored
// records the aggregates are NaN.
UtilityReport ComputeUtility(const std::vector<EvalRecord>& records,
                             Aggregation aggregation = Aggregation::kMean);

double Median(std::vector<double> values);

struct ReportOptions {
  bool timing = true;
};

std::string FormatReport(const std::vector<EvalRecord>& records, const UtilityReport& utility,
                         const ReportOptions& options = {});

struct PipelineOptions {
  GraphOptions graph;
  std::size_t cap = kDefaultOrderCap;
  ProperNounPolicy proper_nouns = ProperNounPolicy::kAllCaps;
};

struct PipelineResult {
  EvalRecord record;
  PrecedenceGraph graph;
  Enumeration spatial;
  std::vector<ReadingOrder> final_orders;
  bool filtered = false;
  std::vector<std::string> warnings;
};

PipelineResult RunPipeline(const Document& doc, const PipelineOptions& options,
                           const Lexicon& lexicon, const AbbreviationList& abbrevs);

// Reads `<name>.blocks` plus optional text and ground-truth sidecars. Empty
// paths are skipped. The reference is the blocks file's stem.
Document LoadDocument(const std::filesystem::path& blocks_path,
                      const std::filesystem::path& text_path = {},
                      const std::filesystem::path& order_path = {},
                      std::vector<std::string>* warnings = nullptr);

// `*.blocks` files in `dir`, sorted by name.
std::vector<std::filesystem::path> DiscoverCorpus(const std::filesystem::path& dir);

// Loads and runs every document in `dir` on up to `threads` workers (0 means
// hardware concurrency). Results are in DiscoverCorpus order.
std::vector<PipelineResult> EvaluateCorpus(const std::filesystem::path& dir,
                                           const PipelineOptions& options,
                                           const Lexicon& lexicon,
                                           const AbbreviationList& abbrevs,
                                           unsigned threads = 0);

}  // namespace readorder

#endif  // READORDER_EVALUATION_H_
