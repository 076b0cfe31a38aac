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

#include "readorder/evaluation.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "readorder/error.h"

namespace readorder {
namespace {

std::string FormatFixed(double v) {
  if (std::isnan(v)) return "-";
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return in;
}

std::filesystem::path Sibling(const std::filesystem::path& blocks, const char* ext) {
  std::filesystem::path p = blocks;
  p.replace_extension(ext);
  return std::filesystem::exists(p) ? p : std::filesystem::path();
}

}  // namespace

std::string ReadingCount::ToString() const {
  if (exact) return std::to_string(*exact);
  double exponent = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exponent);
  if (mantissa >= 9.995) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2fe+%02d", mantissa, static_cast<int>(exponent));
  return buf;
}

ReadingCount PossibleReadings(unsigned n_text_blocks) {
  ReadingCount count;
  count.n = n_text_blocks;
  count.log10_value = std::lgamma(static_cast<double>(n_text_blocks) + 1.0) / std::log(10.0);
  if (n_text_blocks <= 20) {
    std::uint64_t f = 1;
    for (unsigned k = 2; k <= n_text_blocks; ++k) f *= k;
    count.exact = f;
    count.log10_value = std::log10(static_cast<double>(f));
  }
  return count;
}

std::optional<double> UtilityRatio(const EvalRecord& record) {
  if (!record.correct) return std::nullopt;
  if (!*record.correct) return std::numeric_limits<double>::infinity();
  if (record.n_possible.exact) {
    return static_cast<double>(record.n_spatial) / static_cast<double>(*record.n_possible.exact);
  }
  return std::pow(10.0, std::log10(static_cast<double>(record.n_spatial)) -
                            record.n_possible.log10_value);
}

std::string_view AggregationName(Aggregation a) {
  return a == Aggregation::kMean ? "mean" : "sum";
}

std::optional<Aggregation> AggregationFromName(std::string_view name) {
  if (name == "mean") return Aggregation::kMean;
  if (name == "sum") return Aggregation::kSum;
  return std::nullopt;
}

double Median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

UtilityReport ComputeUtility(const std::vector<EvalRecord>& records, Aggregation aggregation) {
  if (records.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "utility needs at least one record");
  }
  UtilityReport report;
  report.aggregation = aggregation;
  for (const EvalRecord& r : records) {
    if (std::optional<double> ratio = UtilityRatio(r)) {
      report.ratios.push_back(*ratio);
    } else {
      ++report.unscored;
    }
  }
  if (report.ratios.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.sum = report.mean = report.median = nan;
    return report;
  }
  for (double v : report.ratios) report.sum += v;
  report.mean = report.sum / static_cast<double>(report.ratios.size());
  report.median = Median(report.ratios);
  return report;
}

std::string FormatReport(const std::vector<EvalRecord>& records, const UtilityReport& utility,
                         const ReportOptions& options) {
  std::ostringstream out;
  out << "Reference\t#Bl\t#Txt_Bl\t#Poss_r\t#Spat_admiss_r\t#Final\tCorrect";
  if (options.timing) out << "\tEx_t";
  out << '\n';
  for (const EvalRecord& r : records) {
    out << r.reference << '\t' << r.n_blocks << '\t' << r.n_text_blocks << '\t'
        << r.n_possible.ToString() << '\t' << r.n_spatial
        << (r.n_spatial_is_lower_bound ? "+" : "") << '\t';
    if (r.n_final) {
      out << *r.n_final << (r.truncated ? "+" : "");
    } else {
      out << '-';
    }
    out << '\t' << (r.correct ? (*r.correct ? "yes" : "no") : "-");
    if (options.timing) out << '\t' << FormatFixed(r.exec_seconds);
    out << '\n';
  }
  out << "# utility_sum\t" << FormatFixed(utility.sum) << '\n';
  out << "# utility_mean\t" << FormatFixed(utility.mean) << '\n';
  out << "# utility_median\t" << FormatFixed(utility.median) << '\n';
  out << "# utility\t" << AggregationName(utility.aggregation) << '\t'
      << FormatFixed(utility.headline()) << '\n';
  if (utility.unscored > 0) out << "# unscored\t" << utility.unscored << '\n';
  return out.str();
}

PipelineResult RunPipeline(const Document& doc, const PipelineOptions& options,
                           const Lexicon& lexicon, const AbbreviationList& abbrevs) {
  const auto start = std::chrono::steady_clock::now();
  PipelineResult result;
  EvalRecord& rec = result.record;
  rec.reference = doc.reference();
  rec.n_blocks = doc.objects().size();

  result.graph = BuildPrecedenceGraph(doc, options.graph);
  rec.n_text_blocks = result.graph.size();
  rec.n_possible = PossibleReadings(static_cast<unsigned>(rec.n_text_blocks));

  result.spatial = EnumerateOrders(result.graph, options.cap);
  rec.truncated = result.spatial.truncated;
  rec.n_spatial = result.spatial.orders.size();
  if (rec.truncated) {
    if (std::optional<std::uint64_t> exact = CountOrders(result.graph)) {
      rec.n_spatial = *exact;
    } else {
      rec.n_spatial_is_lower_bound = true;
    }
  }

  std::set<std::string> corpus_caps;
  if (options.proper_nouns == ProperNounPolicy::kCorpus) {
    corpus_caps = CollectMidSentenceCapitalized(doc, abbrevs);
  }
  HeuristicJudge judge(lexicon, options.proper_nouns, std::move(corpus_caps));
  FilterResult filtered = FilterOrders(result.spatial.orders, doc, judge, abbrevs);
  result.filtered = !filtered.skipped;
  result.final_orders = std::move(filtered.orders);
  result.warnings = std::move(filtered.warnings);
  if (result.filtered) rec.n_final = result.final_orders.size();
  if (rec.truncated) {
    result.warnings.push_back("enumeration stopped at " + std::to_string(options.cap) +
                              " orders");
  }

  if (const std::optional<ReadingOrder>& truth = doc.ground_truth()) {
    bool ok = false;
    try {
      ok = CheckOrder(*truth, result.graph);
    } catch (const Error&) {
      result.warnings.push_back("ground truth is not a permutation of the analysed blocks");
    }
    if (ok && result.filtered) {
      ok = !FilterOrders({*truth}, doc, judge, abbrevs).orders.empty();
    }
    rec.correct = ok;
  }

  rec.exec_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Document LoadDocument(const std::filesystem::path& blocks_path,
                      const std::filesystem::path& text_path,
                      const std::filesystem::path& order_path,
                      std::vector<std::string>* warnings) {
  std::vector<DocObject> objects;
  {
    std::ifstream in = OpenOrThrow(blocks_path);
    objects = ParseBlocks(in);
  }
  std::map<BlockId, std::string> text;
  if (!text_path.empty()) {
    std::ifstream in = OpenOrThrow(text_path);
    text = ParseTextTable(in);
  }
  Document doc = AttachText(blocks_path.stem().string(), std::move(objects), text, warnings);
  if (!order_path.empty()) {
    std::ifstream in = OpenOrThrow(order_path);
    doc.SetGroundTruth(ParseOrder(in));
  }
  return doc;
}

std::vector<std::filesystem::path> DiscoverCorpus(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot read directory " + dir.string());
  std::vector<std::filesystem::path> out;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".blocks") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipelineResult> EvaluateCorpus(const std::filesystem::path& dir,
                                           const PipelineOptions& options,
                                           const Lexicon& lexicon,
                                           const AbbreviationList& abbrevs,
                                           unsigned threads) {
  const std::vector<std::filesystem::path> files = DiscoverCorpus(dir);
  std::vector<PipelineResult> results(files.size());
  std::vector<std::exception_ptr> errors(files.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, files.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        std::vector<std::string> warnings;
        Document doc = LoadDocument(files[i], Sibling(files[i], ".text"),
                                    Sibling(files[i], ".order"), &warnings);
        results[i] = RunPipeline(doc, options, lexicon, abbrevs);
        results[i].warnings.insert(results[i].warnings.begin(), warnings.begin(), warnings.end());
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), files[i].filename().string() + ": " + e.what());
    }
  }
  return results;
}

}  // namespace readorder
