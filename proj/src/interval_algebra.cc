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

#include "readorder/interval_algebra.h"

#include <deque>

namespace readorder {
namespace {

constexpr std::array<std::string_view, kNumAllenRelations> kNames = {
    "precedes",     "meets",      "overlaps",    "starts",    "during",
    "finishes",     "equals",     "preceded_by", "met_by",    "overlapped_by",
    "started_by",   "contains",   "finished_by",
};

constexpr std::uint16_t P = 1u << 0;
constexpr std::uint16_t M = 1u << 1;
constexpr std::uint16_t O = 1u << 2;
constexpr std::uint16_t S = 1u << 3;
constexpr std::uint16_t D = 1u << 4;
constexpr std::uint16_t F = 1u << 5;
constexpr std::uint16_t E = 1u << 6;
constexpr std::uint16_t PI = 1u << 7;
constexpr std::uint16_t MI = 1u << 8;
constexpr std::uint16_t OI = 1u << 9;
constexpr std::uint16_t SI = 1u << 10;
constexpr std::uint16_t DI = 1u << 11;
constexpr std::uint16_t FI = 1u << 12;
constexpr std::uint16_t kAll = (1u << 13) - 1;

// Rows: r1, columns: r2, both in AllenRelation enumeration order.
constexpr std::uint16_t kComposition[kNumAllenRelations][kNumAllenRelations] = {
    // precedes
    {P, P, P, P, P|M|O|S|D, P|M|O|S|D, P, kAll, P|M|O|S|D, P|M|O|S|D, P, P, P},
    // meets
    {P, P, P, M, O|S|D, O|S|D, M, PI|MI|OI|SI|DI, F|E|FI, O|S|D, M, P, P},
    // overlaps
    {P, P, P|M|O, O, O|S|D, O|S|D, O, PI|MI|OI|SI|DI, OI|SI|DI,
     O|S|D|F|E|OI|SI|DI|FI, O|DI|FI, P|M|O|DI|FI, P|M|O},
    // starts
    {P, P, P|M|O, S, D, D, S, PI, MI, D|F|OI, S|E|SI, P|M|O|DI|FI, P|M|O},
    // during
    {P, P, P|M|O|S|D, D, D, D, D, PI, PI, D|F|PI|MI|OI, D|F|PI|MI|OI, kAll,
     P|M|O|S|D},
    // finishes
    {P, M, O|S|D, D, D, F, F, PI, PI, PI|MI|OI, PI|MI|OI, PI|MI|OI|SI|DI, F|E|FI},
    // equals
    {P, M, O, S, D, F, E, PI, MI, OI, SI, DI, FI},
    // preceded_by
    {kAll, D|F|PI|MI|OI, D|F|PI|MI|OI, D|F|PI|MI|OI, D|F|PI|MI|OI, PI, PI, PI,
     PI, PI, PI, PI, PI},
    // met_by
    {P|M|O|DI|FI, S|E|SI, D|F|OI, D|F|OI, D|F|OI, MI, MI, PI, PI, PI, PI, PI, MI},
    // overlapped_by
    {P|M|O|DI|FI, O|DI|FI, O|S|D|F|E|OI|SI|DI|FI, D|F|OI, D|F|OI, OI, OI, PI, PI,
     PI|MI|OI, PI|MI|OI, PI|MI|OI|SI|DI, OI|SI|DI},
    // started_by
    {P|M|O|DI|FI, O|DI|FI, O|DI|FI, S|E|SI, D|F|OI, OI, SI, PI, MI, OI, SI, DI, DI},
    // contains
    {P|M|O|DI|FI, O|DI|FI, O|DI|FI, O|DI|FI, O|S|D|F|E|OI|SI|DI|FI, OI|SI|DI, DI,
     PI|MI|OI|SI|DI, OI|SI|DI, OI|SI|DI, DI, DI, DI},
    // finished_by
    {P, M, O, O, O|S|D, F|E|FI, FI, PI|MI|OI|SI|DI, OI|SI|DI, OI|SI|DI, DI, DI, FI},
};

}  // namespace

std::string_view RelationName(AllenRelation r) {
  return kNames[static_cast<std::size_t>(r)];
}

std::optional<AllenRelation> RelationFromName(std::string_view name) {
  for (AllenRelation r : kAllRelations) {
    if (RelationName(r) == name) return r;
  }
  return std::nullopt;
}

RelationSet RelationSet::converse() const {
  RelationSet out;
  for (AllenRelation r : kAllRelations) {
    if (contains(r)) out |= Converse(r);
  }
  return out;
}

std::vector<AllenRelation> RelationSet::members() const {
  std::vector<AllenRelation> out;
  for (AllenRelation r : kAllRelations) {
    if (contains(r)) out.push_back(r);
  }
  return out;
}

AllenRelation ClassifyIntervals(Interval a, Interval b, Coord tolerance) {
  auto eq = [tolerance](Coord u, Coord v) {
    return (u > v ? u - v : v - u) <= tolerance;
  };
  auto lt = [tolerance](Coord u, Coord v) { return v - u > tolerance; };

  if (lt(a.hi, b.lo)) return AllenRelation::kPrecedes;
  if (lt(b.hi, a.lo)) return AllenRelation::kPrecededBy;
  if (eq(a.hi, b.lo)) return AllenRelation::kMeets;
  if (eq(b.hi, a.lo)) return AllenRelation::kMetBy;

  const bool same_lo = eq(a.lo, b.lo);
  const bool same_hi = eq(a.hi, b.hi);
  if (same_lo && same_hi) return AllenRelation::kEquals;
  if (same_lo) return lt(a.hi, b.hi) ? AllenRelation::kStarts : AllenRelation::kStartedBy;
  if (same_hi) return lt(b.lo, a.lo) ? AllenRelation::kFinishes : AllenRelation::kFinishedBy;
  if (lt(b.lo, a.lo) && lt(a.hi, b.hi)) return AllenRelation::kDuring;
  if (lt(a.lo, b.lo) && lt(b.hi, a.hi)) return AllenRelation::kContains;
  if (lt(a.lo, b.lo)) return AllenRelation::kOverlaps;
  return AllenRelation::kOverlappedBy;
}

RelationSet Compose(AllenRelation r1, AllenRelation r2) {
  return RelationSet::FromMask(
      kComposition[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)]);
}

RelationSet Compose(RelationSet s1, RelationSet s2) {
  RelationSet out;
  for (AllenRelation r1 : kAllRelations) {
    if (!s1.contains(r1)) continue;
    for (AllenRelation r2 : kAllRelations) {
      if (s2.contains(r2)) out |= Compose(r1, r2);
    }
    if (out.full()) break;
  }
  return out;
}

RectangleRelationSet Compose(RectangleRelation r1, RectangleRelation r2) {
  return {Compose(r1.x, r2.x), Compose(r1.y, r2.y)};
}

IntervalNetwork::IntervalNetwork(std::size_t n)
    : n_(n), labels_(n * n, RelationSet::All()) {
  for (std::size_t i = 0; i < n_; ++i) labels_[i * n_ + i] = AllenRelation::kEquals;
}

IntervalNetwork IntervalNetwork::FromIntervals(std::span<const Interval> intervals,
                                               Coord tolerance) {
  IntervalNetwork net(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      net.Constrain(i, j, ClassifyIntervals(intervals[i], intervals[j], tolerance));
    }
  }
  return net;
}

void IntervalNetwork::Constrain(std::size_t i, std::size_t j, RelationSet s) {
  set_label(i, j, s);
  set_label(j, i, s.converse());
}

PathConsistencyResult PathConsistency(IntervalNetwork net) {
  const std::size_t n = net.size();
  PathConsistencyResult result{std::move(net), std::nullopt};
  IntervalNetwork& g = result.network;

  for (std::size_t i = 0; i < n; ++i) {
    RelationSet diag = g.label(i, i) & AllenRelation::kEquals;
    g.set_label(i, i, diag);
    if (diag.empty()) {
      result.inconsistency = Inconsistency{i, i};
      return result;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      RelationSet ij = g.label(i, j) & g.label(j, i).converse();
      g.Constrain(i, j, ij);
      if (ij.empty()) {
        result.inconsistency = Inconsistency{i, j};
        return result;
      }
    }
  }

  // PC-2 style worklist over unordered pairs.
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  std::vector<char> queued(n * n, 0);
  auto push = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (i == j || queued[i * n + j]) return;
    queued[i * n + j] = 1;
    queue.emplace_back(i, j);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) push(i, j);
  }

  // Tightens label(a, c) through b; returns false once a label empties.
  auto revise = [&](std::size_t a, std::size_t b, std::size_t c) {
    RelationSet current = g.label(a, c);
    RelationSet refined = current & Compose(g.label(a, b), g.label(b, c));
    if (refined == current) return true;
    g.Constrain(a, c, refined);
    if (refined.empty()) {
      result.inconsistency = Inconsistency{a, c};
      return false;
    }
    push(a, c);
    return true;
  };

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    queued[i * n + j] = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      // label(i, k) via j and label(k, j) via i.
      if (!revise(i, j, k)) return result;
      if (!revise(k, i, j)) return result;
    }
  }
  return result;
}

}  // namespace readorder
