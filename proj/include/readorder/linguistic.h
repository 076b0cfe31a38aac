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

// Shallow linguistic checks on the junction between two text blocks: does
// the end of block m read on into the start of block n?

#ifndef READORDER_LINGUISTIC_H_
#define READORDER_LINGUISTIC_H_

#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "readorder/document.h"

namespace readorder {

// Case-insensitive set of word forms used to validate hyphenation joins.
class Lexicon {
 public:
  Lexicon() = default;
  static Lexicon FromWords(const std::vector<std::string>& words);
  // One word per line; blank lines are skipped.
  static Lexicon Load(std::istream& in);
  static Lexicon LoadFile(const std::string& path);  // throws Error(kIo)

  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Tokens whose final period belongs to the token, e.g. "approx.", "e.g.".
class AbbreviationList {
 public:
  AbbreviationList() = default;
  // Throws ParseError(kParse) when an entry does not end with '.'.
  static AbbreviationList FromEntries(const std::vector<std::string>& entries);
  static AbbreviationList Load(std::istream& in);
  static AbbreviationList LoadFile(const std::string& path);

  // Exact match, or match after ASCII lowercasing.
  bool Contains(std::string_view token) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

// Paths of the data files shipped with the library.
std::string DefaultLexiconPath();
std::string DefaultAbbreviationPath();

enum class TokenKind { kWord, kPunctuation, kBoundary };

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits on whitespace and peels punctuation off word edges. A period is a
// sentence boundary unless its word is a listed abbreviation, a single
// capital initial ("J.") or a dotted acronym ("U.S."); '!' and '?' always
// are.
std::vector<Token> Tokenize(std::string_view text, const AbbreviationList& abbrevs);

enum class EndKind { kHyphenated, kMidSentence, kSentenceBoundary };

std::string_view EndKindName(EndKind kind);

// Throws Error(kEmptyBlock) when there are no tokens.
EndKind ClassifyEnd(const std::vector<Token>& tokens);
EndKind ClassifyEnd(std::string_view block_text, const AbbreviationList& abbrevs);

// The last and first sentence fragments of a block.
struct BlockEnds {
  // Tokens after the last sentence boundary that is not the block's own
  // closing boundary; the whole block when there is none.
  std::vector<Token> end_fragment;
  // Tokens up to and including the first sentence boundary (and any closing
  // brackets or quotes right after it); the whole block when there is none.
  std::vector<Token> beg_fragment;
  EndKind end_kind = EndKind::kMidSentence;
};

BlockEnds ExtractBlockEnds(std::string_view block_text, const AbbreviationList& abbrevs);

enum class JunctionVerdict { kAccept, kReject, kUndecided };

std::string_view VerdictName(JunctionVerdict verdict);

// Which capitalized words may continue a sentence across a junction.
enum class ProperNounPolicy {
  kAllCaps,  // acronyms such as "HTML"
  kCorpus,   // acronyms, plus words seen capitalized mid-sentence in the document
  kNone,
};

// Decides whether m may be immediately followed by n. Implementations must
// be deterministic; kUndecided never removes an order.
class ContinuationJudge {
 public:
  virtual ~ContinuationJudge() = default;
  virtual JunctionVerdict Judge(const BlockEnds& m, const BlockEnds& n) const = 0;
};

// Default judge: lexicon lookup for hyphenated ends, case and punctuation
// heuristics otherwise.
class HeuristicJudge : public ContinuationJudge {
 public:
  explicit HeuristicJudge(const Lexicon& lexicon,
                          ProperNounPolicy policy = ProperNounPolicy::kAllCaps,
                          std::set<std::string> corpus_capitalized = {})
      : lexicon_(lexicon), policy_(policy), corpus_capitalized_(std::move(corpus_capitalized)) {}

  JunctionVerdict Judge(const BlockEnds& m, const BlockEnds& n) const override;

 private:
  bool AllowedCapitalized(const std::string& word) const;

  const Lexicon& lexicon_;
  ProperNounPolicy policy_;
  std::set<std::string> corpus_capitalized_;
};

JunctionVerdict JudgeJunction(const BlockEnds& m, const BlockEnds& n, const Lexicon& lexicon);

// Capitalized words that occur somewhere other than a sentence start, for
// ProperNounPolicy::kCorpus.
std::set<std::string> CollectMidSentenceCapitalized(const Document& doc,
                                                    const AbbreviationList& abbrevs);

struct FilterResult {
  std::vector<ReadingOrder> orders;
  // Set when some block in the orders has no text; orders pass unchanged.
  bool skipped = false;
  std::vector<std::string> warnings;
};

// Keeps the orders with no rejected consecutive junction, in input order.
FilterResult FilterOrders(const std::vector<ReadingOrder>& orders, const Document& doc,
                          const ContinuationJudge& judge, const AbbreviationList& abbrevs);
FilterResult FilterOrders(const std::vector<ReadingOrder>& orders, const Document& doc,
                          const Lexicon& lexicon, const AbbreviationList& abbrevs);

}  // namespace readorder

#endif  // READORDER_LINGUISTIC_H_
