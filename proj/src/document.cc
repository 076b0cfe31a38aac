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

#include "readorder/document.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "readorder/error.h"

namespace readorder {
namespace {

// Cursor over one block line.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= line_.size() || line_[pos_] != c) {
      Fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::int64_t Integer(const char* what) {
    SkipSpace();
    std::int64_t value = 0;
    const char* begin = line_.data() + pos_;
    const char* end = line_.data() + line_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      Fail(std::string("expected integer ") + what);
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::string Token(const char* what) {
    SkipSpace();
    std::size_t start = pos_;
    while (pos_ < line_.size() && !IsSpace(line_[pos_]) && line_[pos_] != ',' &&
           line_[pos_] != '[' && line_[pos_] != ']') {
      ++pos_;
    }
    if (pos_ == start) Fail(std::string("expected ") + what);
    return std::string(line_.substr(start, pos_ - start));
  }

  void ExpectEnd() {
    SkipSpace();
    if (pos_ != line_.size()) Fail("trailing characters");
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(line_no_, message + " at column " + std::to_string(pos_ + 1));
  }

 private:
  static bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
  void SkipSpace() {
    while (pos_ < line_.size() && IsSpace(line_[pos_])) ++pos_;
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int NarrowInt(std::int64_t v, const LineScanner& scan, const char* what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    scan.Fail(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

DocObject ParseBlockLine(std::string_view line, std::size_t line_no) {
  LineScanner scan(line, line_no);
  DocObject obj;
  scan.Expect('[');
  obj.id = scan.Integer("id");
  if (obj.id <= 0) scan.Fail("id must be positive");
  scan.Expect(',');
  obj.kind = NarrowInt(scan.Integer("kind"), scan, "kind");
  scan.Expect(',');
  scan.Expect('[');
  obj.bbox.x1 = scan.Integer("x1");
  scan.Expect(',');
  obj.bbox.y1 = scan.Integer("y1");
  scan.Expect(',');
  obj.bbox.x2 = scan.Integer("x2");
  scan.Expect(',');
  obj.bbox.y2 = scan.Integer("y2");
  scan.Expect(']');
  scan.Expect(',');
  obj.font_name = scan.Token("font name");
  scan.Expect(',');
  obj.font_size = NarrowInt(scan.Integer("font size"), scan, "font size");
  scan.Expect(',');
  obj.fg_color = scan.Integer("foreground color");
  scan.Expect(',');
  obj.bg_color = scan.Integer("background color");
  scan.Expect(']');
  scan.ExpectEnd();
  if (!obj.bbox.valid()) {
    throw ParseError(line_no, "box invariant violated (need x1 <= x2 and y1 <= y2)",
                     ErrorCode::kInvalidBox);
  }
  return obj;
}

}  // namespace

RectangleRelation ClassifyRectangles(const BoundingBox& a, const BoundingBox& b,
                                     Coord tolerance) {
  return {ClassifyIntervals(a.x_range(), b.x_range(), tolerance),
          ClassifyIntervals(a.y_range(), b.y_range(), tolerance)};
}

std::vector<DocObject> ParseBlocks(std::istream& in) {
  std::vector<DocObject> objects;
  std::unordered_set<BlockId> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    DocObject obj = ParseBlockLine(body, line_no);
    if (!seen.insert(obj.id).second) {
      throw ParseError(line_no, "duplicate id " + std::to_string(obj.id),
                       ErrorCode::kDuplicateId);
    }
    objects.push_back(std::move(obj));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error in block listing");
  return objects;
}

std::vector<DocObject> ParseBlocks(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseBlocks(in);
}

std::string FormatBlock(const DocObject& obj) {
  std::ostringstream out;
  out << '[' << obj.id << ", " << obj.kind << ", [" << obj.bbox.x1 << ", "
      << obj.bbox.y1 << ", " << obj.bbox.x2 << ", " << obj.bbox.y2 << "], "
      << obj.font_name << " , " << obj.font_size << ", " << obj.fg_color << ", "
      << obj.bg_color << ']';
  return out.str();
}

std::string EscapeText(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string UnescapeText(std::string_view escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    char c = escaped[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (i + 1 == escaped.size()) throw ParseError(0, "dangling backslash in text");
    switch (escaped[++i]) {
      case '\\': out += '\\'; break;
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      default:
        throw ParseError(0, std::string("unknown escape \\") + escaped[i]);
    }
  }
  return out;
}

std::map<BlockId, std::string> ParseTextTable(std::istream& in) {
  std::map<BlockId, std::string> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "missing TAB after id");
    std::string_view id_text = Trim(std::string_view(line).substr(0, tab));
    BlockId id = 0;
    auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc() || ptr != id_text.data() + id_text.size() || id_text.empty()) {
      throw ParseError(line_no, "bad block id '" + std::string(id_text) + "'");
    }
    std::string text;
    try {
      text = UnescapeText(std::string_view(line).substr(tab + 1));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
    if (!table.emplace(id, std::move(text)).second) {
      throw ParseError(line_no, "duplicate id " + std::to_string(id), ErrorCode::kDuplicateId);
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error in text table");
  return table;
}

std::string FormatTextTable(const std::map<BlockId, std::string>& table) {
  std::string out;
  for (const auto& [id, text] : table) {
    out += std::to_string(id);
    out += '\t';
    out += EscapeText(text);
    out += '\n';
  }
  return out;
}

ReadingOrder ParseOrder(std::istream& in) {
  ReadingOrder order;
  std::string token;
  while (in >> token) {
    if (token.front() == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    BlockId id = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(0, "bad id '" + token + "' in reading order");
    }
    order.push_back(id);
  }
  return order;
}

Document::Document(std::string reference, std::vector<DocObject> objects)
    : reference_(std::move(reference)), objects_(std::move(objects)) {
  std::unordered_set<BlockId> seen;
  for (const DocObject& obj : objects_) {
    if (!seen.insert(obj.id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate id " + std::to_string(obj.id));
    }
    if (!obj.bbox.valid()) {
      throw Error(ErrorCode::kInvalidBox,
                  "box invariant violated for id " + std::to_string(obj.id));
    }
  }
}

const DocObject* Document::Find(BlockId id) const {
  auto it = std::find_if(objects_.begin(), objects_.end(),
                         [id](const DocObject& o) { return o.id == id; });
  return it == objects_.end() ? nullptr : &*it;
}

std::vector<const DocObject*> Document::TextBlocks(const std::set<int>& kinds) const {
  std::vector<const DocObject*> out;
  for (const DocObject& obj : objects_) {
    if (kinds.count(obj.kind)) out.push_back(&obj);
  }
  std::sort(out.begin(), out.end(),
            [](const DocObject* a, const DocObject* b) { return a->id < b->id; });
  return out;
}

void Document::SetGroundTruth(ReadingOrder order, const std::set<int>& kinds) {
  std::unordered_set<BlockId> seen;
  for (BlockId id : order) {
    const DocObject* obj = Find(id);
    if (obj == nullptr || !kinds.count(obj->kind)) {
      throw Error(ErrorCode::kUnknownId,
                  "ground truth id " + std::to_string(id) + " is not a text block");
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kNotPermutation,
                  "ground truth repeats id " + std::to_string(id));
    }
  }
  ground_truth_ = std::move(order);
}

Document AttachText(std::string reference, std::vector<DocObject> objects,
                    const std::map<BlockId, std::string>& text_table,
                    std::vector<std::string>* warnings) {
  for (const auto& [id, text] : text_table) {
    auto it = std::find_if(objects.begin(), objects.end(),
                           [id = id](const DocObject& o) { return o.id == id; });
    if (it == objects.end()) {
      throw Error(ErrorCode::kUnknownId, "text given for unknown id " + std::to_string(id));
    }
    if (it->kind != kTextKind && warnings != nullptr) {
      warnings->push_back("text attached to id " + std::to_string(id) + " of kind " +
                          std::to_string(it->kind) + ", not a running-text block");
    }
    it->text = text;
  }
  return Document(std::move(reference), std::move(objects));
}

RectangleModel::RectangleModel(const Document& doc, Coord tolerance) {
  std::vector<const DocObject*> sorted;
  for (const DocObject& obj : doc.objects()) sorted.push_back(&obj);
  std::sort(sorted.begin(), sorted.end(),
            [](const DocObject* a, const DocObject* b) { return a->id < b->id; });
  for (const DocObject* obj : sorted) {
    ids_.push_back(obj->id);
    boxes_.push_back(obj->bbox);
  }
  const std::size_t n = ids_.size();
  x_.assign(n * n, AllenRelation::kEquals);
  y_.assign(n * n, AllenRelation::kEquals);
  // The lower triangle is the converse of the upper one, which keeps the
  // model symmetric even for zero-length ranges.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RectangleRelation r = ClassifyRectangles(boxes_[i], boxes_[j], tolerance);
      x_[i * n + j] = r.x;
      y_[i * n + j] = r.y;
      x_[j * n + i] = Converse(r.x);
      y_[j * n + i] = Converse(r.y);
    }
  }
}

std::size_t RectangleModel::IndexOf(BlockId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) {
    throw Error(ErrorCode::kUnknownId, "no object with id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

AllenRelation RectangleModel::x_rel(BlockId a, BlockId b) const {
  return x_[IndexOf(a) * ids_.size() + IndexOf(b)];
}

AllenRelation RectangleModel::y_rel(BlockId a, BlockId b) const {
  return y_[IndexOf(a) * ids_.size() + IndexOf(b)];
}

}  // namespace readorder
