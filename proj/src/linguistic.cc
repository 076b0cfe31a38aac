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

#include "readorder/linguistic.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <utility>

#include "readorder/error.h"

namespace readorder {
namespace {

constexpr std::array<std::string_view, 8> kOpeners = {
    "(", "[", "{", "\"", "'", "“", "‘", "«"};
constexpr std::array<std::string_view, 8> kClosers = {
    ")", "]", "}", "\"", "'", "”", "’", "»"};

bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }
bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
// Bytes of multi-byte UTF-8 sequences count as letters.
bool IsWordChar(char c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) || static_cast<unsigned char>(c) >= 0x80;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsAsciiUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

template <std::size_t N>
std::string_view MatchPrefix(std::string_view s, const std::array<std::string_view, N>& set) {
  for (std::string_view p : set) {
    if (s.substr(0, p.size()) == p) return p;
  }
  return {};
}

template <std::size_t N>
std::string_view MatchSuffix(std::string_view s, const std::array<std::string_view, N>& set) {
  for (std::string_view p : set) {
    if (s.size() >= p.size() && s.substr(s.size() - p.size()) == p) return p;
  }
  return {};
}

template <std::size_t N>
bool OneOf(std::string_view s, const std::array<std::string_view, N>& set) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

bool IsCloser(const Token& t) {
  return t.kind == TokenKind::kPunctuation && OneOf(t.text, kClosers);
}
bool IsOpener(const Token& t) {
  return t.kind == TokenKind::kPunctuation && OneOf(t.text, kOpeners);
}

// "J."
bool IsInitial(std::string_view s) {
  return s.size() == 2 && IsAsciiUpper(s[0]) && s[1] == '.';
}

// "U.S.", "i.e.", "U.S.A."
bool IsDottedAcronym(std::string_view s) {
  if (s.size() < 4 || s.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    if (!IsAsciiAlpha(s[i]) || s[i + 1] != '.') return false;
  }
  return true;
}

bool KeepsPeriod(std::string_view core, const AbbreviationList& abbrevs) {
  return abbrevs.Contains(core) || IsInitial(core) || IsDottedAcronym(core);
}

void TokenizeChunk(std::string_view chunk, const AbbreviationList& abbrevs,
                   std::vector<Token>* out) {
  while (!chunk.empty()) {
    std::string_view open = MatchPrefix(chunk, kOpeners);
    if (open.empty()) break;
    out->push_back({std::string(open), TokenKind::kPunctuation});
    chunk.remove_prefix(open.size());
  }

  std::vector<Token> trailing;  // collected back to front
  while (!chunk.empty()) {
    char last = chunk.back();
    std::string_view close = MatchSuffix(chunk, kClosers);
    if (!close.empty()) {
      trailing.push_back({std::string(close), TokenKind::kPunctuation});
      chunk.remove_suffix(close.size());
    } else if (last == ',' || last == ';' || last == ':') {
      trailing.push_back({std::string(1, last), TokenKind::kPunctuation});
      chunk.remove_suffix(1);
    } else if (last == '!' || last == '?') {
      trailing.push_back({std::string(1, last), TokenKind::kBoundary});
      chunk.remove_suffix(1);
    } else if (last == '.') {
      if (KeepsPeriod(chunk, abbrevs)) break;
      std::size_t dots = 0;
      while (dots < chunk.size() && chunk[chunk.size() - 1 - dots] == '.') ++dots;
      trailing.push_back({std::string(dots, '.'), TokenKind::kBoundary});
      chunk.remove_suffix(dots);
    } else {
      break;
    }
  }

  if (!chunk.empty()) {
    bool has_word_char = std::any_of(chunk.begin(), chunk.end(), IsWordChar);
    out->push_back({std::string(chunk),
                    has_word_char ? TokenKind::kWord : TokenKind::kPunctuation});
  }
  out->insert(out->end(), trailing.rbegin(), trailing.rend());
}

// Index one past the last token that is neither a boundary nor a closer.
std::size_t ContentEnd(const std::vector<Token>& tokens) {
  std::size_t end = tokens.size();
  while (end > 0 && (tokens[end - 1].kind == TokenKind::kBoundary || IsCloser(tokens[end - 1]))) {
    --end;
  }
  return end;
}

bool IsHyphenatedWord(const Token& t) {
  return t.kind == TokenKind::kWord && t.text.size() >= 2 && t.text.back() == '-' &&
         (IsAsciiAlpha(t.text[t.text.size() - 2]) ||
          static_cast<unsigned char>(t.text[t.text.size() - 2]) >= 0x80);
}

// "HTML", "W3C": at least two letters, none of them lowercase.
bool IsAllCaps(std::string_view word) {
  int upper = 0;
  for (char c : word) {
    if (IsAsciiLower(c)) return false;
    if (IsAsciiUpper(c)) ++upper;
  }
  return upper >= 2;
}

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && IsSpace(line.back())) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && IsSpace(line[start])) ++start;
    lines.push_back(line.substr(start));
  }
  return lines;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

}  // namespace

Lexicon Lexicon::FromWords(const std::vector<std::string>& words) {
  Lexicon lex;
  for (const std::string& w : words) {
    if (!w.empty()) lex.words_.insert(AsciiLower(w));
  }
  return lex;
}

Lexicon Lexicon::Load(std::istream& in) {
  return FromWords(ReadLines(in));
}

Lexicon Lexicon::LoadFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return Load(in);
}

bool Lexicon::Contains(std::string_view word) const {
  return words_.count(AsciiLower(word)) != 0;
}

AbbreviationList AbbreviationList::FromEntries(const std::vector<std::string>& entries) {
  AbbreviationList list;
  std::size_t line = 0;
  for (const std::string& e : entries) {
    ++line;
    if (e.empty()) continue;
    if (e.back() != '.') {
      throw ParseError(line, "abbreviation '" + e + "' does not end with '.'");
    }
    list.entries_.insert(e);
  }
  return list;
}

AbbreviationList AbbreviationList::Load(std::istream& in) {
  return FromEntries(ReadLines(in));
}

AbbreviationList AbbreviationList::LoadFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return Load(in);
}

bool AbbreviationList::Contains(std::string_view token) const {
  return entries_.count(std::string(token)) != 0 || entries_.count(AsciiLower(token)) != 0;
}

std::string DefaultLexiconPath() { return std::string(READORDER_DATA_DIR) + "/lexicon.txt"; }
std::string DefaultAbbreviationPath() {
  return std::string(READORDER_DATA_DIR) + "/abbreviations.txt";
}

std::vector<Token> Tokenize(std::string_view text, const AbbreviationList& abbrevs) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) TokenizeChunk(text.substr(start, i - start), abbrevs, &tokens);
  }
  return tokens;
}

std::string_view EndKindName(EndKind kind) {
  switch (kind) {
    case EndKind::kHyphenated: return "hyphenated";
    case EndKind::kMidSentence: return "mid_sentence";
    case EndKind::kSentenceBoundary: return "sentence_boundary";
  }
  return "";
}

EndKind ClassifyEnd(const std::vector<Token>& tokens) {
  if (tokens.empty()) throw Error(ErrorCode::kEmptyBlock, "cannot classify the end of an empty block");
  std::size_t i = tokens.size();
  while (i > 0 && IsCloser(tokens[i - 1])) --i;
  if (i > 0 && tokens[i - 1].kind == TokenKind::kBoundary) return EndKind::kSentenceBoundary;
  if (IsHyphenatedWord(tokens.back())) return EndKind::kHyphenated;
  return EndKind::kMidSentence;
}

EndKind ClassifyEnd(std::string_view block_text, const AbbreviationList& abbrevs) {
  return ClassifyEnd(Tokenize(block_text, abbrevs));
}

BlockEnds ExtractBlockEnds(std::string_view block_text, const AbbreviationList& abbrevs) {
  std::vector<Token> tokens = Tokenize(block_text, abbrevs);
  BlockEnds ends;
  if (tokens.empty()) return ends;
  ends.end_kind = ClassifyEnd(tokens);

  std::size_t content_end = ContentEnd(tokens);
  std::size_t end_start = 0;
  for (std::size_t i = content_end; i > 0; --i) {
    if (tokens[i - 1].kind == TokenKind::kBoundary) {
      end_start = i;
      while (end_start < content_end && IsCloser(tokens[end_start])) ++end_start;
      break;
    }
  }
  ends.end_fragment.assign(tokens.begin() + static_cast<std::ptrdiff_t>(end_start), tokens.end());

  std::size_t beg_stop = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::kBoundary) {
      beg_stop = i + 1;
      while (beg_stop < tokens.size() &&
             (tokens[beg_stop].kind == TokenKind::kBoundary || IsCloser(tokens[beg_stop]))) {
        ++beg_stop;
      }
      break;
    }
  }
  ends.beg_fragment.assign(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(beg_stop));
  return ends;
}

std::string_view VerdictName(JunctionVerdict verdict) {
  switch (verdict) {
    case JunctionVerdict::kAccept: return "accept";
    case JunctionVerdict::kReject: return "reject";
    case JunctionVerdict::kUndecided: return "undecided";
  }
  return "";
}

bool HeuristicJudge::AllowedCapitalized(const std::string& word) const {
  switch (policy_) {
    case ProperNounPolicy::kNone: return false;
    case ProperNounPolicy::kAllCaps: return IsAllCaps(word);
    case ProperNounPolicy::kCorpus:
      return IsAllCaps(word) || corpus_capitalized_.count(word) != 0;
  }
  return false;
}

JunctionVerdict HeuristicJudge::Judge(const BlockEnds& m, const BlockEnds& n) const {
  const std::vector<Token>& beg = n.beg_fragment;
  if (beg.empty() || m.end_fragment.empty()) return JunctionVerdict::kUndecided;

  switch (m.end_kind) {
    case EndKind::kHyphenated: {
      const Token& first = beg.front();
      if (first.kind != TokenKind::kWord) return JunctionVerdict::kReject;
      std::string stem = m.end_fragment.back().text;
      stem.pop_back();
      return lexicon_.Contains(stem + first.text) ? JunctionVerdict::kAccept
                                                  : JunctionVerdict::kReject;
    }

    case EndKind::kMidSentence: {
      std::size_t i = 0;
      while (i < beg.size() && IsOpener(beg[i])) ++i;
      if (i == beg.size() || beg[i].kind != TokenKind::kWord) return JunctionVerdict::kUndecided;
      const std::string& word = beg[i].text;
      char c = word.front();
      if (IsAsciiDigit(c)) return i == 0 ? JunctionVerdict::kAccept : JunctionVerdict::kUndecided;
      if (IsAsciiLower(c)) return JunctionVerdict::kAccept;
      if (IsAsciiUpper(c)) {
        return AllowedCapitalized(word) ? JunctionVerdict::kAccept : JunctionVerdict::kReject;
      }
      return JunctionVerdict::kUndecided;
    }

    case EndKind::kSentenceBoundary: {
      for (const Token& t : beg) {
        auto it = std::find_if(t.text.begin(), t.text.end(), IsAsciiAlpha);
        if (it == t.text.end()) continue;
        return IsAsciiLower(*it) ? JunctionVerdict::kReject : JunctionVerdict::kUndecided;
      }
      return JunctionVerdict::kUndecided;
    }
  }
  return JunctionVerdict::kUndecided;
}

JunctionVerdict JudgeJunction(const BlockEnds& m, const BlockEnds& n, const Lexicon& lexicon) {
  return HeuristicJudge(lexicon).Judge(m, n);
}

std::set<std::string> CollectMidSentenceCapitalized(const Document& doc,
                                                    const AbbreviationList& abbrevs) {
  std::set<std::string> out;
  for (const DocObject& obj : doc.objects()) {
    if (!obj.text) continue;
    std::vector<Token> tokens = Tokenize(*obj.text, abbrevs);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      const Token& prev = tokens[i - 1];
      if (t.kind != TokenKind::kWord || !IsAsciiUpper(t.text.front())) continue;
      if (prev.kind == TokenKind::kBoundary || IsOpener(prev)) continue;
      out.insert(t.text);
    }
  }
  return out;
}

FilterResult FilterOrders(const std::vector<ReadingOrder>& orders, const Document& doc,
                          const ContinuationJudge& judge, const AbbreviationList& abbrevs) {
  FilterResult result;
  std::map<BlockId, BlockEnds> ends;
  for (const ReadingOrder& order : orders) {
    for (BlockId id : order) {
      if (ends.count(id)) continue;
      const DocObject* obj = doc.Find(id);
      BlockEnds e;
      if (obj != nullptr && obj->text) e = ExtractBlockEnds(*obj->text, abbrevs);
      if (e.beg_fragment.empty()) {
        result.skipped = true;
        result.warnings.push_back("block " + std::to_string(id) +
                                  " has no text; linguistic filtering skipped");
        result.orders = orders;
        return result;
      }
      ends.emplace(id, std::move(e));
    }
  }

  std::map<std::pair<BlockId, BlockId>, JunctionVerdict> memo;
  auto verdict = [&](BlockId m, BlockId n) {
    auto key = std::make_pair(m, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    JunctionVerdict v = judge.Judge(ends.at(m), ends.at(n));
    memo.emplace(key, v);
    return v;
  };

  for (const ReadingOrder& order : orders) {
    bool rejected = false;
    for (std::size_t i = 0; i + 1 < order.size() && !rejected; ++i) {
      rejected = verdict(order[i], order[i + 1]) == JunctionVerdict::kReject;
    }
    if (!rejected) result.orders.push_back(order);
  }
  return result;
}

FilterResult FilterOrders(const std::vector<ReadingOrder>& orders, const Document& doc,
                          const Lexicon& lexicon, const AbbreviationList& abbrevs) {
  return FilterOrders(orders, doc, HeuristicJudge(lexicon), abbrevs);
}

}  // namespace readorder
