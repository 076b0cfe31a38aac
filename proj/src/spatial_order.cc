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

#include "readorder/spatial_order.h"

#include <algorithm>
#include <unordered_set>

#include "readorder/error.h"

namespace readorder {
namespace {

bool IsForward(AllenRelation r) {
  return r == AllenRelation::kPrecedes || r == AllenRelation::kMeets ||
         r == AllenRelation::kOverlaps;
}

bool Intersects(Interval a, Interval b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

class OrderEnumerator {
 public:
  OrderEnumerator(const PrecedenceGraph& g, std::size_t cap)
      : g_(g), cap_(cap), remaining_(g.size(), 1), left_(g.size()) {}

  Enumeration Run() {
    Recurse();
    return std::move(result_);
  }

 private:
  bool Placeable(std::size_t x) const {
    for (std::size_t y = 0; y < g_.size(); ++y) {
      if (y != x && remaining_[y] && !g_.HasEdgeAt(x, y)) return false;
    }
    return true;
  }

  // Returns false to stop the search.
  bool Recurse() {
    if (left_ == 0) {
      if (result_.orders.size() == cap_) {
        result_.truncated = true;
        return false;
      }
      result_.orders.push_back(prefix_);
      return true;
    }
    for (std::size_t x = 0; x < g_.size(); ++x) {
      if (!remaining_[x] || !Placeable(x)) continue;
      remaining_[x] = 0;
      --left_;
      prefix_.push_back(g_.nodes()[x]);
      bool go_on = Recurse();
      prefix_.pop_back();
      ++left_;
      remaining_[x] = 1;
      if (!go_on) return false;
    }
    return true;
  }

  const PrecedenceGraph& g_;
  std::size_t cap_;
  std::vector<char> remaining_;
  std::size_t left_;
  ReadingOrder prefix_;
  Enumeration result_;
};

}  // namespace

std::string_view RuleSetName(RuleSet rules) {
  return rules == RuleSet::kGeneral ? "general" : "column";
}

std::optional<RuleSet> RuleSetFromName(std::string_view name) {
  if (name == "general") return RuleSet::kGeneral;
  if (name == "column") return RuleSet::kColumnAware;
  return std::nullopt;
}

bool BeforeInReading(const DocObject& b1, const DocObject& b2, RuleSet rules,
                     Coord tolerance) {
  RectangleRelation r = ClassifyRectangles(b1.bbox, b2.bbox, tolerance);
  if (IsForward(r.x)) return true;
  if (!IsForward(r.y)) return false;
  return rules == RuleSet::kGeneral || Intersects(b1.bbox.x_range(), b2.bbox.x_range());
}

PrecedenceGraph::PrecedenceGraph(std::vector<BlockId> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error(ErrorCode::kDuplicateId, "precedence graph nodes must be distinct");
  }
  adj_.assign(nodes_.size() * nodes_.size(), 0);
}

std::size_t PrecedenceGraph::IndexOf(BlockId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) {
    throw Error(ErrorCode::kUnknownId, "block " + std::to_string(id) + " is not in the graph");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool PrecedenceGraph::Contains(BlockId id) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), id);
}

bool PrecedenceGraph::HasEdge(BlockId from, BlockId to) const {
  return HasEdgeAt(IndexOf(from), IndexOf(to));
}

void PrecedenceGraph::AddEdge(BlockId from, BlockId to) {
  if (from == to) return;
  adj_[IndexOf(from) * size() + IndexOf(to)] = 1;
}

void PrecedenceGraph::RemoveEdge(BlockId from, BlockId to) {
  adj_[IndexOf(from) * size() + IndexOf(to)] = 0;
}

std::vector<std::pair<BlockId, BlockId>> PrecedenceGraph::Edges() const {
  std::vector<std::pair<BlockId, BlockId>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (HasEdgeAt(i, j)) out.emplace_back(nodes_[i], nodes_[j]);
    }
  }
  return out;
}

std::size_t PrecedenceGraph::EdgeCount() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1));
}

PrecedenceGraph BuildPrecedenceGraph(const Document& doc, const GraphOptions& options) {
  std::vector<const DocObject*> blocks;
  if (options.all_blocks) {
    for (const DocObject& obj : doc.objects()) blocks.push_back(&obj);
  } else {
    blocks = doc.TextBlocks(options.text_kinds);
  }
  std::vector<BlockId> ids;
  for (const DocObject* b : blocks) ids.push_back(b->id);
  PrecedenceGraph g(std::move(ids));
  for (const DocObject* a : blocks) {
    for (const DocObject* b : blocks) {
      if (a->id != b->id && BeforeInReading(*a, *b, options.rules, options.tolerance)) {
        g.AddEdge(a->id, b->id);
      }
    }
  }
  return g;
}

Enumeration EnumerateOrders(const PrecedenceGraph& g, std::size_t cap) {
  return OrderEnumerator(g, cap).Run();
}

std::optional<std::uint64_t> CountOrders(const PrecedenceGraph& g) {
  const std::size_t n = g.size();
  if (n > kMaxCountNodes) return std::nullopt;
  // out[x]: bitmask of nodes x has an edge to.
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.HasEdgeAt(x, y)) out[x] |= 1u << y;
    }
  }
  // ways[s]: admissible orders of the node subset s, which depends on s alone.
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((1ull << n) - 1);
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(full) + 1, 0);
  ways[0] = 1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint32_t bit = 1u << x;
      if (!(s & bit)) continue;
      const std::uint32_t rest = s & ~bit;
      if ((out[x] & rest) == rest) total += ways[rest];
    }
    ways[s] = total;
  }
  return ways[full];
}

bool CheckOrder(const ReadingOrder& order, const PrecedenceGraph& g) {
  std::unordered_set<BlockId> seen;
  for (BlockId id : order) {
    if (!g.Contains(id) || !seen.insert(id).second) {
      throw Error(ErrorCode::kNotPermutation,
                  "order is not a permutation of the graph's blocks");
    }
  }
  if (seen.size() != g.size()) {
    throw Error(ErrorCode::kNotPermutation,
                "order is not a permutation of the graph's blocks");
  }
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (!g.HasEdge(order[a], order[b])) return false;
    }
  }
  return true;
}

}  // namespace readorder
