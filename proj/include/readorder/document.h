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

#ifndef READORDER_DOCUMENT_H_
#define READORDER_DOCUMENT_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "readorder/interval_algebra.h"

namespace readorder {

using BlockId = std::int64_t;
using ReadingOrder = std::vector<BlockId>;

// Kind code of running-text blocks in layout listings.
inline constexpr int kTextKind = 1;

// Axis-aligned box in document units. y grows downward.
struct BoundingBox {
  Coord x1 = 0;
  Coord y1 = 0;
  Coord x2 = 0;
  Coord y2 = 0;

  bool valid() const { return x1 <= x2 && y1 <= y2; }
  Interval x_range() const { return {x1, x2}; }
  Interval y_range() const { return {y1, y2}; }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

RectangleRelation ClassifyRectangles(const BoundingBox& a, const BoundingBox& b,
                                     Coord tolerance = 0);

struct DocObject {
  BlockId id = 0;
  int kind = 0;
  BoundingBox bbox;
  std::string font_name;
  int font_size = 0;
  std::int64_t fg_color = 0;
  std::int64_t bg_color = 0;
  std::optional<std::string> text;

  friend bool operator==(const DocObject&, const DocObject&) = default;
};

// Parses block lines of the form
//   [ID, KIND, [X1, Y1, X2, Y2], FONT , SIZE, FG, BG]
// Blank lines and lines starting with '#' are skipped. Throws ParseError
// (with the 1-based line number) on malformed lines, duplicate ids, and
// boxes with x1 > x2 or y1 > y2.
std::vector<DocObject> ParseBlocks(std::istream& in);
std::vector<DocObject> ParseBlocks(std::string_view text);

// Inverse of ParseBlocks for one object, in the canonical spacing
// "[1, 1, [13, 23, 93, 101], TimesNewRoman , 11, 0, 16777215]".
std::string FormatBlock(const DocObject& obj);

// Text sidecar: one "ID<TAB>escaped-text" record per line, with \n, \t and
// \\ as the only escapes.
std::map<BlockId, std::string> ParseTextTable(std::istream& in);
std::string EscapeText(std::string_view raw);
std::string UnescapeText(std::string_view escaped);  // throws ParseError
std::string FormatTextTable(const std::map<BlockId, std::string>& table);

// Ground truth sidecar: whitespace-separated ids on one line.
ReadingOrder ParseOrder(std::istream& in);

class Document {
 public:
  Document() = default;
  Document(std::string reference, std::vector<DocObject> objects);

  const std::string& reference() const { return reference_; }
  const std::vector<DocObject>& objects() const { return objects_; }
  const std::optional<ReadingOrder>& ground_truth() const { return ground_truth_; }

  // nullptr when absent.
  const DocObject* Find(BlockId id) const;

  // Blocks whose kind is in `kinds`, ascending by id.
  std::vector<const DocObject*> TextBlocks(const std::set<int>& kinds = {kTextKind}) const;

  // Throws Error(kUnknownId) if an id is missing or not of a text kind,
  // Error(kNotPermutation) on repeated ids.
  void SetGroundTruth(ReadingOrder order, const std::set<int>& kinds = {kTextKind});

 private:
  std::string reference_;
  std::vector<DocObject> objects_;
  std::optional<ReadingOrder> ground_truth_;
};

// Attaches `text_table` to `objects`. Unknown ids throw Error(kUnknownId);
// ids whose kind is not a text kind are attached anyway and reported in
// `warnings`.
Document AttachText(std::string reference, std::vector<DocObject> objects,
                    const std::map<BlockId, std::string>& text_table,
                    std::vector<std::string>* warnings = nullptr);

// Pairwise Allen relations on both axes among a document's objects.
class RectangleModel {
 public:
  explicit RectangleModel(const Document& doc, Coord tolerance = 0);

  const std::vector<BlockId>& ids() const { return ids_; }
  const BoundingBox& box(BlockId id) const { return boxes_[IndexOf(id)]; }

  AllenRelation x_rel(BlockId a, BlockId b) const;
  AllenRelation y_rel(BlockId a, BlockId b) const;
  RectangleRelation relation(BlockId a, BlockId b) const { return {x_rel(a, b), y_rel(a, b)}; }

 private:
  std::size_t IndexOf(BlockId id) const;  // throws Error(kUnknownId)

  std::vector<BlockId> ids_;  // ascending
  std::vector<BoundingBox> boxes_;
  std::vector<AllenRelation> x_;
  std::vector<AllenRelation> y_;
};

}  // namespace readorder

#endif  // READORDER_DOCUMENT_H_
