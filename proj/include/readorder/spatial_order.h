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

// Reading-order rules over the rectangle model, the precedence graph they
// induce, and enumeration of every total order compatible with it.

#ifndef READORDER_SPATIAL_ORDER_H_
#define READORDER_SPATIAL_ORDER_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "readorder/document.h"

namespace readorder {

enum class RuleSet {
  // b1 before b2 iff b1 precedes, meets or overlaps b2 on x or on y.
  kGeneral,
  // As kGeneral, but vertical precedence only counts between blocks whose
  // x-ranges intersect. Horizontal precedence always counts.
  kColumnAware,
};

std::string_view RuleSetName(RuleSet rules);
std::optional<RuleSet> RuleSetFromName(std::string_view name);  // "general" | "column"

bool BeforeInReading(const DocObject& b1, const DocObject& b2, RuleSet rules,
                     Coord tolerance = 0);

// Directed "may be read before" relation over a set of block ids. Both
// (i, j) and (j, i) may be present.
class PrecedenceGraph {
 public:
  PrecedenceGraph() = default;
  // `nodes` must be distinct; they are stored ascending.
  explicit PrecedenceGraph(std::vector<BlockId> nodes);

  const std::vector<BlockId>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool Contains(BlockId id) const;

  bool HasEdge(BlockId from, BlockId to) const;
  void AddEdge(BlockId from, BlockId to);  // self-loops are ignored
  void RemoveEdge(BlockId from, BlockId to);

  // Edges ordered by (from, to).
  std::vector<std::pair<BlockId, BlockId>> Edges() const;
  std::size_t EdgeCount() const;

  // Dense-index view used by the enumerators.
  bool HasEdgeAt(std::size_t from, std::size_t to) const { return adj_[from * size() + to] != 0; }

 private:
  std::size_t IndexOf(BlockId id) const;  // throws Error(kUnknownId)

  std::vector<BlockId> nodes_;
  std::vector<std::uint8_t> adj_;
};

struct GraphOptions {
  RuleSet rules = RuleSet::kGeneral;
  std::set<int> text_kinds = {kTextKind};
  // Use every object as a node instead of text blocks only.
  bool all_blocks = false;
  Coord tolerance = 0;
};

PrecedenceGraph BuildPrecedenceGraph(const Document& doc, const GraphOptions& options = {});

inline constexpr std::size_t kDefaultOrderCap = 1000;

struct Enumeration {
  std::vector<ReadingOrder> orders;  // lexicographic
  bool truncated = false;            // more orders exist beyond the cap
};

// Every permutation in which each block has an edge to every block placed
// after it.
Enumeration EnumerateOrders(const PrecedenceGraph& g, std::size_t cap = kDefaultOrderCap);

// Exact number of admissible orders, by dynamic programming over subsets of
// nodes. nullopt when the graph has more than kMaxCountNodes nodes.
inline constexpr std::size_t kMaxCountNodes = 20;
std::optional<std::uint64_t> CountOrders(const PrecedenceGraph& g);

// True iff every ordered pair of `order` is an edge. Throws
// Error(kNotPermutation) unless `order` is a permutation of the nodes.
bool CheckOrder(const ReadingOrder& order, const PrecedenceGraph& g);

}  // namespace readorder

#endif  // READORDER_SPATIAL_ORDER_H_
