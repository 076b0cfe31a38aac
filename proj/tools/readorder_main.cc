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

// Command-line front end. Talks to the library only through its C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "readorder/readorder.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoOrders = 2;

struct DocumentDeleter {
  void operator()(ro_document* d) const { ro_document_free(d); }
};
struct EdgesDeleter {
  void operator()(ro_edges* e) const { ro_edges_free(e); }
};
struct OrdersDeleter {
  void operator()(ro_orders* o) const { ro_orders_free(o); }
};
struct LinguisticsDeleter {
  void operator()(ro_linguistics* l) const { ro_linguistics_free(l); }
};
struct StringDeleter {
  void operator()(char* s) const { ro_string_free(s); }
};

using Document = std::unique_ptr<ro_document, DocumentDeleter>;
using Orders = std::unique_ptr<ro_orders, OrdersDeleter>;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Check(ro_status status) {
  if (status != RO_OK) {
    throw CliError(std::string(ro_status_name(status)) + ": " + ro_last_error());
  }
}

ro_rules ParseRules(const std::string& name) {
  return name == "column" ? RO_RULES_COLUMN : RO_RULES_GENERAL;
}

Document LoadDocument(const std::string& blocks, const char* text = nullptr) {
  ro_document* raw = nullptr;
  Check(ro_document_load(blocks.c_str(), text, nullptr, &raw));
  Document doc(raw);
  for (size_t i = 0; i < ro_document_warning_count(doc.get()); ++i) {
    std::cerr << "warning: " << ro_document_warning(doc.get(), i) << '\n';
  }
  return doc;
}

int PrintOrders(const ro_orders* orders) {
  for (size_t i = 0; i < ro_orders_warning_count(orders); ++i) {
    std::cerr << "warning: " << ro_orders_warning(orders, i) << '\n';
  }
  const size_t n = ro_orders_count(orders);
  for (size_t i = 0; i < n; ++i) {
    std::cout << '[';
    for (size_t k = 0; k < ro_orders_length(orders, i); ++k) {
      if (k > 0) std::cout << ", ";
      std::cout << ro_orders_at(orders, i, k);
    }
    std::cout << "]\n";
  }
  return n == 0 ? kExitNoOrders : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reading-order extraction from document layouts"};
  app.require_subcommand(1);

  std::string blocks_path;
  std::string text_path;
  std::string dir;
  std::string rules = "general";
  std::string aggregation = "mean";
  std::string lexicon_path;
  std::string abbrev_path;
  size_t cap = 1000;
  bool all_blocks = false;
  bool no_timing = false;

  auto add_rules = [&](CLI::App* cmd) {
    cmd->add_option("--rules", rules, "Rule set")
        ->check(CLI::IsMember({"general", "column"}))
        ->capture_default_str();
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap, "Maximum number of orders to enumerate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* relations = app.add_subcommand("relations", "Print the before-in-reading pairs");
  relations->add_option("blocks", blocks_path, "Block listing")->required();
  add_rules(relations);
  relations->add_flag("--all-blocks", all_blocks, "Include non-text blocks");

  CLI::App* orders = app.add_subcommand("orders", "Print all spatially admissible orders");
  orders->add_option("blocks", blocks_path, "Block listing")->required();
  add_rules(orders);
  add_cap(orders);

  CLI::App* disambiguate =
      app.add_subcommand("disambiguate", "Filter admissible orders with block text");
  disambiguate->add_option("blocks", blocks_path, "Block listing")->required();
  disambiguate->add_option("text", text_path, "Block text table")->required();
  add_rules(disambiguate);
  disambiguate->add_option("--lexicon", lexicon_path, "Word list, one word per line");
  disambiguate->add_option("--abbrev", abbrev_path, "Abbreviation list, one per line");
  add_cap(disambiguate);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate every *.blocks file in a directory");
  eval->add_option("dir", dir, "Corpus directory")->required();
  add_rules(eval);
  eval->add_option("--aggregation", aggregation, "Utility aggregation")
      ->check(CLI::IsMember({"mean", "sum"}))
      ->capture_default_str();
  add_cap(eval);
  eval->add_flag("--no-timing", no_timing, "Omit the Ex_t column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*relations) {
      Document doc = LoadDocument(blocks_path);
      ro_edges* raw = nullptr;
      Check(ro_relations(doc.get(), ParseRules(rules), all_blocks ? 1 : 0, &raw));
      std::unique_ptr<ro_edges, EdgesDeleter> edges(raw);
      for (size_t i = 0; i < ro_edges_count(edges.get()); ++i) {
        int64_t from = 0;
        int64_t to = 0;
        Check(ro_edges_get(edges.get(), i, &from, &to));
        std::cout << (i > 0 ? ", " : "") << '[' << from << ", " << to << ']';
      }
      std::cout << '\n';
      return kExitOk;
    }

    if (*orders) {
      Document doc = LoadDocument(blocks_path);
      ro_orders* raw = nullptr;
      Check(ro_spatial_orders(doc.get(), ParseRules(rules), cap, &raw));
      return PrintOrders(Orders(raw).get());
    }

    if (*disambiguate) {
      Document doc = LoadDocument(blocks_path, text_path.c_str());
      ro_linguistics* ling_raw = nullptr;
      Check(ro_linguistics_load(lexicon_path.empty() ? nullptr : lexicon_path.c_str(),
                                abbrev_path.empty() ? nullptr : abbrev_path.c_str(),
                                &ling_raw));
      std::unique_ptr<ro_linguistics, LinguisticsDeleter> ling(ling_raw);
      ro_orders* spatial_raw = nullptr;
      Check(ro_spatial_orders(doc.get(), ParseRules(rules), cap, &spatial_raw));
      Orders spatial(spatial_raw);
      ro_orders* final_raw = nullptr;
      Check(ro_filter_orders(doc.get(), ling.get(), spatial.get(), &final_raw));
      return PrintOrders(Orders(final_raw).get());
    }

    if (*eval) {
      char* report_raw = nullptr;
      char* warnings_raw = nullptr;
      Check(ro_evaluate_directory(
          dir.c_str(), ParseRules(rules),
          aggregation == "sum" ? RO_AGGREGATION_SUM : RO_AGGREGATION_MEAN, cap,
          no_timing ? 0 : 1, nullptr, &report_raw, &warnings_raw));
      std::unique_ptr<char, StringDeleter> report(report_raw);
      std::unique_ptr<char, StringDeleter> warnings(warnings_raw);
      if (warnings && *warnings) std::cerr << warnings.get();
      std::cout << report.get();
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
