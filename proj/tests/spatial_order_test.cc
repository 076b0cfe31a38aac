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

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "pages.h"
#include "readorder/error.h"
#include "readorder/spatial_order.h"

namespace readorder {
namespace {

using testing::Edge;

std::vector<Edge> EdgesOf(const Document& doc, RuleSet rules) {
  GraphOptions options;
  options.rules = rules;
  return BuildPrecedenceGraph(doc, options).Edges();
}

PrecedenceGraph RandomGraph(std::mt19937& rng, std::size_t n, double density) {
  std::vector<BlockId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(static_cast<BlockId>(i * 2 + 1));
  PrecedenceGraph g(nodes);
  std::bernoulli_distribution edge(density);
  for (BlockId a : nodes) {
    for (BlockId b : nodes) {
      if (a != b && edge(rng)) g.AddEdge(a, b);
    }
  }
  return g;
}

std::set<std::pair<long long, long long>> EdgeSet(const PrecedenceGraph& g) {
  std::set<std::pair<long long, long long>> out;
  for (auto [a, b] : g.Edges()) out.insert({a, b});
  return out;
}

std::vector<std::vector<long long>> Widen(const std::vector<ReadingOrder>& orders) {
  std::vector<std::vector<long long>> out;
  for (const ReadingOrder& o : orders) out.emplace_back(o.begin(), o.end());
  return out;
}

// Random page of non-overlapping-ish boxes in a few columns.
Document RandomPage(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<Coord> x(0, 300), y(0, 400), w(10, 150), h(5, 80);
  std::vector<DocObject> objs;
  for (std::size_t i = 0; i < n; ++i) {
    DocObject o;
    o.id = static_cast<BlockId>(i + 1);
    o.kind = kTextKind;
    Coord x1 = x(rng), y1 = y(rng);
    o.bbox = {x1, y1, x1 + w(rng), y1 + h(rng)};
    o.font_name = "F";
    objs.push_back(o);
  }
  return Document("random", objs);
}

TEST_CASE("before in reading: examples") {
  Document p1 = testing::Page1();
  Document p2 = testing::Page2();
  CHECK(BeforeInReading(*p1.Find(1), *p1.Find(2), RuleSet::kGeneral));
  CHECK_FALSE(BeforeInReading(*p1.Find(2), *p1.Find(1), RuleSet::kGeneral));
  // 6 is above 8 but in a different column.
  CHECK(BeforeInReading(*p2.Find(6), *p2.Find(8), RuleSet::kGeneral));
  CHECK_FALSE(BeforeInReading(*p2.Find(6), *p2.Find(8), RuleSet::kColumnAware));
  // Same column, above.
  CHECK(BeforeInReading(*p2.Find(5), *p2.Find(8), RuleSet::kColumnAware));
  // x precedence always counts.
  CHECK(BeforeInReading(*p2.Find(8), *p2.Find(6), RuleSet::kColumnAware));
}

TEST_CASE("before in reading: meets and overlaps count, touching columns intersect") {
  DocObject a{1, 1, {0, 0, 10, 10}, "F", 1, 0, 0, {}};
  DocObject b{2, 1, {10, 0, 20, 10}, "F", 1, 0, 0, {}};   // x meets
  DocObject c{3, 1, {5, 20, 15, 30}, "F", 1, 0, 0, {}};   // x overlaps, y precedes
  DocObject d{4, 1, {10, 20, 30, 30}, "F", 1, 0, 0, {}};  // x ranges touch at 10
  CHECK(BeforeInReading(a, b, RuleSet::kGeneral));
  CHECK_FALSE(BeforeInReading(b, a, RuleSet::kGeneral));
  CHECK(BeforeInReading(a, c, RuleSet::kColumnAware));
  CHECK(BeforeInReading(a, d, RuleSet::kColumnAware));
}

TEST_CASE("precedence graph: page goldens") {
  CHECK(EdgesOf(testing::Page1(), RuleSet::kGeneral) == testing::Page1GeneralEdges());
  CHECK(EdgesOf(testing::Page2(), RuleSet::kGeneral) == testing::Page2GeneralEdges());
  CHECK(EdgesOf(testing::Page1(), RuleSet::kColumnAware) ==
        std::vector<Edge>{{1, 2}, {1, 6}, {1, 7}, {2, 7}, {6, 2}, {6, 7}});

  Document single("one", {DocObject{3, 1, {0, 0, 5, 5}, "F", 1, 0, 0, {}}});
  PrecedenceGraph g = BuildPrecedenceGraph(single);
  CHECK(g.nodes() == std::vector<BlockId>{3});
  CHECK(g.EdgeCount() == 0);
}

TEST_CASE("precedence graph: all blocks") {
  GraphOptions options;
  options.all_blocks = true;
  PrecedenceGraph g = BuildPrecedenceGraph(testing::Page2(), options);
  CHECK(g.size() == 15);
  CHECK(g.HasEdge(16, 17));   // the zero-height rule sits just above block 17
  CHECK(g.HasEdge(1, 4));
  for (auto [a, b] : g.Edges()) CHECK(a != b);
}

TEST_CASE("precedence graph: node bookkeeping") {
  PrecedenceGraph g({5, 1, 3});
  CHECK(g.nodes() == std::vector<BlockId>{1, 3, 5});
  g.AddEdge(1, 1);
  CHECK(g.EdgeCount() == 0);
  g.AddEdge(5, 1);
  CHECK(g.HasEdge(5, 1));
  g.RemoveEdge(5, 1);
  CHECK_FALSE(g.HasEdge(5, 1));
  CHECK_THROWS_AS(g.AddEdge(1, 2), Error);
  CHECK_THROWS_AS(PrecedenceGraph({1, 1}), Error);
}

TEST_CASE("enumerate: page goldens") {
  Enumeration e1 = EnumerateOrders(BuildPrecedenceGraph(testing::Page1()));
  CHECK(e1.orders == std::vector<ReadingOrder>{{1, 2, 6, 7}, {1, 6, 2, 7}});
  CHECK_FALSE(e1.truncated);

  Enumeration e2 = EnumerateOrders(BuildPrecedenceGraph(testing::Page2()));
  CHECK(e2.orders == testing::Page2GeneralOrders());

  PrecedenceGraph one({9});
  CHECK(EnumerateOrders(one).orders == std::vector<ReadingOrder>{{9}});
}

TEST_CASE("enumerate: the printed order set needs all-pairs semantics") {
  // With consecutive-pair semantics, page 2 would admit more than 9 orders.
  PrecedenceGraph g = BuildPrecedenceGraph(testing::Page2());
  std::vector<BlockId> nodes = g.nodes();
  std::size_t consecutive = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < nodes.size() && ok; ++i) ok = g.HasEdge(nodes[i], nodes[i + 1]);
    consecutive += ok;
  } while (std::next_permutation(nodes.begin(), nodes.end()));
  CHECK(consecutive > 9);
  CHECK(EnumerateOrders(g).orders.size() == 9);
}

TEST_CASE("enumerate: cap and truncation") {
  PrecedenceGraph g = BuildPrecedenceGraph(testing::Page2());
  Enumeration capped = EnumerateOrders(g, 4);
  CHECK(capped.truncated);
  REQUIRE(capped.orders.size() == 4);
  CHECK(std::equal(capped.orders.begin(), capped.orders.end(),
                   testing::Page2GeneralOrders().begin()));
  CHECK_FALSE(EnumerateOrders(g, 9).truncated);
}

TEST_CASE("enumerate: no admissible order") {
  PrecedenceGraph g({1, 2});
  CHECK(EnumerateOrders(g).orders.empty());
  CHECK(CountOrders(g) == 0u);
}

TEST_CASE("property: enumeration equals the n! brute-force filter") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const double density = 0.5 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    PrecedenceGraph g = RandomGraph(rng, n, density);
    auto expected = testing::BruteForceOrders(
        std::vector<long long>(g.nodes().begin(), g.nodes().end()), EdgeSet(g));
    Enumeration e = EnumerateOrders(g, 100000);
    CHECK(Widen(e.orders) == expected);
    CHECK(CountOrders(g) == expected.size());
    for (const auto& o : expected) CHECK(CheckOrder(ReadingOrder(o.begin(), o.end()), g));
  }
}

TEST_CASE("property: removing an edge never adds orders") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    PrecedenceGraph g = RandomGraph(rng, 5 + trial % 3, 0.8);
    auto edges = g.Edges();
    if (edges.empty()) continue;
    std::vector<ReadingOrder> before = EnumerateOrders(g, 100000).orders;
    auto [a, b] = edges[rng() % edges.size()];
    g.RemoveEdge(a, b);
    std::vector<ReadingOrder> after = EnumerateOrders(g, 100000).orders;
    CHECK(after.size() <= before.size());
    for (const ReadingOrder& o : after) {
      CHECK(std::find(before.begin(), before.end(), o) != before.end());
    }
  }
}

TEST_CASE("property: column-aware edges and orders are a subset of general ones") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Document doc = RandomPage(rng, 3 + trial % 5);
    GraphOptions general;
    GraphOptions column;
    column.rules = RuleSet::kColumnAware;
    PrecedenceGraph gg = BuildPrecedenceGraph(doc, general);
    PrecedenceGraph gc = BuildPrecedenceGraph(doc, column);
    for (auto [a, b] : gc.Edges()) CHECK(gg.HasEdge(a, b));
    std::vector<ReadingOrder> og = EnumerateOrders(gg, 100000).orders;
    for (const ReadingOrder& o : EnumerateOrders(gc, 100000).orders) {
      CHECK(std::find(og.begin(), og.end(), o) != og.end());
    }
  }
}

TEST_CASE("property: enumeration is deterministic") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    PrecedenceGraph g = RandomGraph(rng, 6, 0.85);
    Enumeration a = EnumerateOrders(g);
    Enumeration b = EnumerateOrders(g);
    CHECK(a.orders == b.orders);
    CHECK(std::is_sorted(a.orders.begin(), a.orders.end()));
  }
}

TEST_CASE("check order") {
  PrecedenceGraph g = BuildPrecedenceGraph(testing::Page1());
  CHECK(CheckOrder({1, 6, 2, 7}, g));
  CHECK_FALSE(CheckOrder({2, 1, 6, 7}, g));
  try {
    CheckOrder({7, 1}, g);
    FAIL("expected not-a-permutation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotPermutation);
  }
  CHECK_THROWS_AS(CheckOrder({1, 1, 2, 6}, g), Error);
  CHECK_THROWS_AS(CheckOrder({1, 2, 6, 9}, g), Error);
}

TEST_CASE("count orders: larger graphs") {
  // Complete graph: every permutation is admissible.
  std::vector<BlockId> nodes;
  for (BlockId i = 1; i <= 10; ++i) nodes.push_back(i);
  PrecedenceGraph g(nodes);
  for (BlockId a : nodes) {
    for (BlockId b : nodes) g.AddEdge(a, b);
  }
  CHECK(CountOrders(g) == 3628800u);

  std::vector<BlockId> many;
  for (BlockId i = 1; i <= 21; ++i) many.push_back(i);
  CHECK_FALSE(CountOrders(PrecedenceGraph(many)).has_value());
}

TEST_CASE("rule set names") {
  CHECK(RuleSetFromName("general") == RuleSet::kGeneral);
  CHECK(RuleSetFromName("column") == RuleSet::kColumnAware);
  CHECK_FALSE(RuleSetFromName("columns").has_value());
  CHECK(RuleSetName(RuleSet::kColumnAware) == "column");
}

}  // namespace
}  // namespace readorder
