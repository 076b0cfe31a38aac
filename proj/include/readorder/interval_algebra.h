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

// Allen's thirteen interval relations, their 13 x 13 rectangle product, and
// path-consistency propagation over networks of disjunctive interval labels.

#ifndef READORDER_INTERVAL_ALGEBRA_H_
#define READORDER_INTERVAL_ALGEBRA_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace readorder {

using Coord = std::int64_t;

// Closed coordinate range on one axis. Zero-length ranges are allowed.
struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  bool valid() const { return lo <= hi; }
  bool degenerate() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class AllenRelation : std::uint8_t {
  kPrecedes = 0,
  kMeets,
  kOverlaps,
  kStarts,
  kDuring,
  kFinishes,
  kEquals,
  kPrecededBy,
  kMetBy,
  kOverlappedBy,
  kStartedBy,
  kContains,
  kFinishedBy,
};

inline constexpr int kNumAllenRelations = 13;

inline constexpr std::array<AllenRelation, kNumAllenRelations> kAllRelations = {
    AllenRelation::kPrecedes,     AllenRelation::kMeets,
    AllenRelation::kOverlaps,     AllenRelation::kStarts,
    AllenRelation::kDuring,       AllenRelation::kFinishes,
    AllenRelation::kEquals,       AllenRelation::kPrecededBy,
    AllenRelation::kMetBy,        AllenRelation::kOverlappedBy,
    AllenRelation::kStartedBy,    AllenRelation::kContains,
    AllenRelation::kFinishedBy,
};

// Lowercase snake_case name, e.g. "finished_by".
std::string_view RelationName(AllenRelation r);
std::optional<AllenRelation> RelationFromName(std::string_view name);

constexpr AllenRelation Converse(AllenRelation r) {
  switch (r) {
    case AllenRelation::kPrecedes: return AllenRelation::kPrecededBy;
    case AllenRelation::kMeets: return AllenRelation::kMetBy;
    case AllenRelation::kOverlaps: return AllenRelation::kOverlappedBy;
    case AllenRelation::kStarts: return AllenRelation::kStartedBy;
    case AllenRelation::kDuring: return AllenRelation::kContains;
    case AllenRelation::kFinishes: return AllenRelation::kFinishedBy;
    case AllenRelation::kEquals: return AllenRelation::kEquals;
    case AllenRelation::kPrecededBy: return AllenRelation::kPrecedes;
    case AllenRelation::kMetBy: return AllenRelation::kMeets;
    case AllenRelation::kOverlappedBy: return AllenRelation::kOverlaps;
    case AllenRelation::kStartedBy: return AllenRelation::kStarts;
    case AllenRelation::kContains: return AllenRelation::kDuring;
    case AllenRelation::kFinishedBy: return AllenRelation::kFinishes;
  }
  return r;
}

// A disjunction of Allen relations, stored as a 13-bit mask. The empty set
// means inconsistency, the full set means no information.
class RelationSet {
 public:
  constexpr RelationSet() = default;
  constexpr RelationSet(AllenRelation r) : mask_(Bit(r)) {}  // NOLINT
  constexpr RelationSet(std::initializer_list<AllenRelation> rs) {
    for (AllenRelation r : rs) mask_ |= Bit(r);
  }

  static constexpr RelationSet FromMask(std::uint16_t mask) {
    RelationSet s;
    s.mask_ = mask & kFullMask;
    return s;
  }
  static constexpr RelationSet All() { return FromMask(kFullMask); }
  static constexpr RelationSet None() { return RelationSet(); }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool full() const { return mask_ == kFullMask; }
  constexpr bool contains(AllenRelation r) const { return (mask_ & Bit(r)) != 0; }
  constexpr int size() const { return __builtin_popcount(mask_); }

  // Image of every member under Converse().
  RelationSet converse() const;
  std::vector<AllenRelation> members() const;

  constexpr RelationSet operator|(RelationSet o) const { return FromMask(mask_ | o.mask_); }
  constexpr RelationSet operator&(RelationSet o) const { return FromMask(mask_ & o.mask_); }
  constexpr RelationSet& operator|=(RelationSet o) { mask_ |= o.mask_; return *this; }
  constexpr RelationSet& operator&=(RelationSet o) { mask_ &= o.mask_; return *this; }
  friend constexpr bool operator==(RelationSet, RelationSet) = default;

 private:
  static constexpr std::uint16_t kFullMask = (1u << kNumAllenRelations) - 1;
  static constexpr std::uint16_t Bit(AllenRelation r) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(r));
  }

  std::uint16_t mask_ = 0;
};

// Classifies the pair (a, b). With tolerance > 0 two endpoints within the
// tolerance compare equal, which widens meets/equals/starts/finishes.
// Degenerate inputs take the first satisfied condition in the order
// precedes, preceded_by, meets, met_by, equals, starts, started_by,
// finishes, finished_by, during, contains, overlaps, overlapped_by.
AllenRelation ClassifyIntervals(Interval a, Interval b, Coord tolerance = 0);

// Composition table lookup: every relation a-c can stand in given a-b = r1
// and b-c = r2.
RelationSet Compose(AllenRelation r1, AllenRelation r2);
// Union of Compose over all member pairs.
RelationSet Compose(RelationSet s1, RelationSet s2);

struct RectangleRelation {
  AllenRelation x = AllenRelation::kEquals;
  AllenRelation y = AllenRelation::kEquals;

  RectangleRelation converse() const { return {Converse(x), Converse(y)}; }
  // Dense index in [0, 169).
  int index() const { return static_cast<int>(x) * kNumAllenRelations + static_cast<int>(y); }
  friend bool operator==(const RectangleRelation&, const RectangleRelation&) = default;
};

inline constexpr int kNumRectangleRelations = kNumAllenRelations * kNumAllenRelations;

struct RectangleRelationSet {
  RelationSet x;
  RelationSet y;
};

RectangleRelationSet Compose(RectangleRelation r1, RectangleRelation r2);

// A network of interval variables with a disjunctive label on every ordered
// pair. Nodes are dense indices [0, size()).
class IntervalNetwork {
 public:
  // Unconstrained network: every off-diagonal label is the full set.
  explicit IntervalNetwork(std::size_t n);

  // Fully determinate network of the relations holding among `intervals`.
  static IntervalNetwork FromIntervals(std::span<const Interval> intervals,
                                       Coord tolerance = 0);

  std::size_t size() const { return n_; }
  RelationSet label(std::size_t i, std::size_t j) const { return labels_[i * n_ + j]; }

  // Sets label(i, j) only. Use Constrain() to keep the converse in step.
  void set_label(std::size_t i, std::size_t j, RelationSet s) { labels_[i * n_ + j] = s; }
  // Sets label(i, j) = s and label(j, i) = converse(s).
  void Constrain(std::size_t i, std::size_t j, RelationSet s);

  friend bool operator==(const IntervalNetwork&, const IntervalNetwork&) = default;

 private:
  std::size_t n_;
  std::vector<RelationSet> labels_;
};

struct Inconsistency {
  std::size_t from = 0;
  std::size_t to = 0;
};

struct PathConsistencyResult {
  IntervalNetwork network;
  // First edge whose label became empty, if any.
  std::optional<Inconsistency> inconsistency;

  bool consistent() const { return !inconsistency.has_value(); }
};

// Refines every label with the composition of each two-step path through a
// third node until nothing changes. Converse and diagonal constraints are
// enforced first, so a network whose two directions disagree is reported
// inconsistent rather than silently repaired.
PathConsistencyResult PathConsistency(IntervalNetwork net);

}  // namespace readorder

#endif  // READORDER_INTERVAL_ALGEBRA_H_
