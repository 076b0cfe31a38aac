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
#include "readorder/document.h"
#include "readorder/interval_algebra.h"

namespace readorder {
namespace {

using R = AllenRelation;
using testing::MatchingRelations;

TEST_CASE("classify: examples from page listings") {
  CHECK(ClassifyIntervals({13, 93}, {100, 180}) == R::kPrecedes);
  CHECK(ClassifyIntervals({23, 101}, {23, 101}) == R::kEquals);
  CHECK(ClassifyIntervals({302, 385}, {304, 385}) == R::kFinishedBy);
}

TEST_CASE("classify: one example per relation") {
  CHECK(ClassifyIntervals({0, 2}, {3, 5}) == R::kPrecedes);
  CHECK(ClassifyIntervals({0, 3}, {3, 5}) == R::kMeets);
  CHECK(ClassifyIntervals({0, 4}, {3, 5}) == R::kOverlaps);
  CHECK(ClassifyIntervals({3, 4}, {3, 5}) == R::kStarts);
  CHECK(ClassifyIntervals({4, 5}, {3, 6}) == R::kDuring);
  CHECK(ClassifyIntervals({4, 5}, {3, 5}) == R::kFinishes);
  CHECK(ClassifyIntervals({3, 5}, {3, 5}) == R::kEquals);
  CHECK(ClassifyIntervals({6, 7}, {3, 5}) == R::kPrecededBy);
  CHECK(ClassifyIntervals({5, 7}, {3, 5}) == R::kMetBy);
  CHECK(ClassifyIntervals({4, 7}, {3, 5}) == R::kOverlappedBy);
  CHECK(ClassifyIntervals({3, 7}, {3, 5}) == R::kStartedBy);
  CHECK(ClassifyIntervals({2, 7}, {3, 5}) == R::kContains);
  CHECK(ClassifyIntervals({2, 5}, {3, 5}) == R::kFinishedBy);
}

TEST_CASE("classify: degenerate intervals follow the priority order") {
  // Every pair over a small grid, including zero-length intervals.
  for (Coord a0 = 0; a0 <= 5; ++a0) {
    for (Coord a1 = a0; a1 <= 5; ++a1) {
      for (Coord b0 = 0; b0 <= 5; ++b0) {
        for (Coord b1 = b0; b1 <= 5; ++b1) {
          Interval a{a0, a1}, b{b0, b1};
          auto matches = MatchingRelations(a, b);
          REQUIRE_FALSE(matches.empty());
          CHECK(ClassifyIntervals(a, b) == matches.front());
        }
      }
    }
  }
  // The zero-height separator on the second page.
  CHECK(ClassifyIntervals({162, 162}, {164, 174}) == R::kPrecedes);
  CHECK(ClassifyIntervals({162, 162}, {128, 160}) == R::kPrecededBy);
  CHECK(ClassifyIntervals({5, 5}, {5, 5}) == R::kMeets);
}

TEST_CASE("classify: tolerance widens the equality tests") {
  CHECK(ClassifyIntervals({0, 99}, {100, 200}) == R::kPrecedes);
  CHECK(ClassifyIntervals({0, 99}, {100, 200}, 1) == R::kMeets);
  CHECK(ClassifyIntervals({1, 50}, {0, 51}, 1) == R::kEquals);
  CHECK(ClassifyIntervals({1, 40}, {0, 51}, 1) == R::kStarts);
  CHECK(ClassifyIntervals({12, 51}, {0, 50}, 1) == R::kFinishes);
  CHECK(ClassifyIntervals({1, 40}, {0, 51}, 0) == R::kDuring);
}

TEST_CASE("property: exactly one relation holds on random non-degenerate pairs") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<Coord> coord(0, 60);
  for (int i = 0; i < 100000; ++i) {
    Coord p = coord(rng), q = coord(rng), s = coord(rng), t = coord(rng);
    if (p == q || s == t) continue;
    Interval a{std::min(p, q), std::max(p, q)};
    Interval b{std::min(s, t), std::max(s, t)};
    auto matches = MatchingRelations(a, b);
    REQUIRE(matches.size() == 1);
    REQUIRE(ClassifyIntervals(a, b) == matches.front());
    REQUIRE(ClassifyIntervals(b, a) == Converse(ClassifyIntervals(a, b)));
  }
}

TEST_CASE("converse") {
  CHECK(Converse(R::kPrecedes) == R::kPrecededBy);
  CHECK(Converse(R::kEquals) == R::kEquals);
  CHECK(Converse(R::kOverlaps) == R::kOverlappedBy);
  for (R r : kAllRelations) {
    CHECK(Converse(Converse(r)) == r);
    CHECK((Converse(r) == r) == (r == R::kEquals));
  }
}

TEST_CASE("relation names round-trip") {
  std::set<std::string_view> names;
  for (R r : kAllRelations) {
    names.insert(RelationName(r));
    CHECK(RelationFromName(RelationName(r)) == r);
  }
  CHECK(names.size() == 13);
  CHECK_FALSE(RelationFromName("before").has_value());
}

TEST_CASE("compose: examples") {
  CHECK(Compose(R::kPrecedes, R::kPrecedes) == RelationSet{R::kPrecedes});
  for (R r : kAllRelations) {
    CHECK(Compose(R::kEquals, r) == RelationSet{r});
    CHECK(Compose(r, R::kEquals) == RelationSet{r});
  }
  CHECK(Compose(R::kMeets, R::kMetBy) ==
        RelationSet{R::kFinishes, R::kEquals, R::kFinishedBy});
  CHECK(Compose(R::kPrecedes, R::kPrecededBy).full());
}

TEST_CASE("compose: table agrees with exhaustive triples over 0..6") {
  const testing::CompositionOracle oracle = testing::BruteForceComposition(6);
  for (R r1 : kAllRelations) {
    for (R r2 : kAllRelations) {
      std::set<R> expected = oracle[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)];
      std::vector<R> got = Compose(r1, r2).members();
      INFO(RelationName(r1), " o ", RelationName(r2));
      CHECK(std::set<R>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("compose: converse law") {
  for (R r1 : kAllRelations) {
    for (R r2 : kAllRelations) {
      CHECK(Compose(r1, r2).converse() == Compose(Converse(r2), Converse(r1)));
    }
  }
}

TEST_CASE("rectangle relations") {
  BoundingBox b1{13, 23, 93, 101}, b2{100, 23, 180, 101};
  CHECK(ClassifyRectangles(b1, b2) == RectangleRelation{R::kPrecedes, R::kEquals});
  CHECK(ClassifyRectangles(b1, b1) == RectangleRelation{R::kEquals, R::kEquals});
  CHECK(ClassifyRectangles({102, 128, 185, 194}, {102, 225, 185, 260}) ==
        RectangleRelation{R::kEquals, R::kPrecedes});

  std::set<int> indices;
  for (R x : kAllRelations) {
    for (R y : kAllRelations) indices.insert(RectangleRelation{x, y}.index());
  }
  CHECK(indices.size() == kNumRectangleRelations);
  CHECK(*indices.rbegin() == 168);

  RectangleRelationSet c = Compose(RectangleRelation{R::kPrecedes, R::kMeets},
                                   RectangleRelation{R::kPrecedes, R::kMetBy});
  CHECK(c.x == RelationSet{R::kPrecedes});
  CHECK(c.y == RelationSet{R::kFinishes, R::kEquals, R::kFinishedBy});
}

TEST_CASE("path consistency: transitivity refines an unknown edge") {
  IntervalNetwork net(3);
  net.Constrain(0, 1, R::kPrecedes);
  net.Constrain(1, 2, R::kPrecedes);
  PathConsistencyResult r = PathConsistency(net);
  REQUIRE(r.consistent());
  CHECK(r.network.label(0, 2) == RelationSet{R::kPrecedes});
  CHECK(r.network.label(2, 0) == RelationSet{R::kPrecededBy});
}

TEST_CASE("path consistency: converse contradiction is reported") {
  IntervalNetwork net(2);
  net.set_label(0, 1, R::kPrecedes);
  net.set_label(1, 0, R::kPrecedes);
  PathConsistencyResult r = PathConsistency(net);
  REQUIRE_FALSE(r.consistent());
  CHECK(r.inconsistency->from == 0);
  CHECK(r.inconsistency->to == 1);
}

TEST_CASE("path consistency: cycle of precedes is inconsistent") {
  IntervalNetwork net(3);
  net.Constrain(0, 1, R::kPrecedes);
  net.Constrain(1, 2, R::kPrecedes);
  net.Constrain(2, 0, R::kPrecedes);
  CHECK_FALSE(PathConsistency(net).consistent());
}

TEST_CASE("path consistency: determinate network from page boxes is a fixpoint") {
  Document page = testing::Page1();
  for (bool x_axis : {true, false}) {
    std::vector<Interval> ivs;
    for (const DocObject& o : page.objects()) {
      ivs.push_back(x_axis ? o.bbox.x_range() : o.bbox.y_range());
    }
    IntervalNetwork net = IntervalNetwork::FromIntervals(ivs);
    PathConsistencyResult r = PathConsistency(net);
    REQUIRE(r.consistent());
    CHECK(r.network == net);
  }
}

TEST_CASE("property: path consistency is idempotent and sound on random networks") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 20);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 4;
    std::vector<Interval> truth;
    for (std::size_t i = 0; i < n; ++i) {
      int a = coord(rng), b = coord(rng);
      if (a == b) ++b;
      truth.push_back({std::min(a, b), std::max(a, b)});
    }
    // Loosen the true relations with random extra disjuncts, or forget them.
    IntervalNetwork net(n);
    std::uniform_int_distribution<int> mask(0, (1 << 13) - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) continue;
        RelationSet s = RelationSet::FromMask(static_cast<std::uint16_t>(mask(rng) & mask(rng))) |
                        ClassifyIntervals(truth[i], truth[j]);
        net.Constrain(i, j, s);
      }
    }
    PathConsistencyResult once = PathConsistency(net);
    REQUIRE(once.consistent());  // the true scenario is a solution
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(once.network.label(i, j).contains(ClassifyIntervals(truth[i], truth[j])));
      }
    }
    PathConsistencyResult twice = PathConsistency(once.network);
    REQUIRE(twice.consistent());
    CHECK(twice.network == once.network);
  }
}

}  // namespace
}  // namespace readorder
