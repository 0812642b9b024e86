// Copyright 2026 The wikiqual Authors.
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

#ifndef WIKIQUAL_POS_TAGGER_H_
#define WIKIQUAL_POS_TAGGER_H_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wikiqual/document.h"

namespace wikiqual {

// Penn Treebank tags (plus punctuation tags and "SYM"). Every tag the
// tagger emits is a member; lexicon tags outside the set map to "SYM".
const std::vector<std::string>& PennTagset();
// Index into PennTagset(); unknown tags give the index of "SYM".
int PennTagIndex(std::string_view tag);

struct TaggedToken {
  std::string word;
  std::string tag;
  int syllables = 1;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;
  char terminator = '\0';  // as in Sentence
};

struct TaggedDocument {
  std::vector<TaggedSentence> sentences;
  // Copied from the parsed document; source of character trigrams.
  std::vector<std::string> paragraphs;

  size_t token_count() const;
};

// Transformation-based tagger: most-likely tag from a lexicon, lexical
// (suffix, prefix, neighbour) rules for unknown words, then contextual
// rules. Rules use the rule-file format of Brill's tagger v1.14. Instances
// are immutable after loading and safe to share across threads.
class BrillTagger {
 public:
  // Reads lexicon.txt, lexical_rules.txt and context_rules.txt.
  static BrillTagger LoadFromDirectory(const std::string& dir);
  static BrillTagger Load(std::istream& lexicon, std::istream& lexical_rules,
                          std::istream& context_rules);

  std::vector<std::string> Tag(const std::vector<std::string>& tokens) const;

  bool IsKnown(std::string_view word) const;
  size_t lexicon_size() const { return lexicon_.size(); }

 private:
  enum class Cmd {
    // lexical
    kChar, kHasPref, kHasSuf, kAddPref, kAddSuf, kDeletePref, kDeleteSuf,
    kGoodLeft, kGoodRight,
    // contextual
    kPrevTag, kNextTag, kPrev2Tag, kNext2Tag, kPrev1Or2Tag, kNext1Or2Tag,
    kPrev1Or2Or3Tag, kNext1Or2Or3Tag, kSurroundTag, kCurWd, kPrevWd, kNextWd,
    kPrev1Or2Wd, kNext1Or2Wd, kPrevWdTag, kNextWdTag, kWdPrevTag, kWdNextTag,
    kWdAnd2Aft, kWdAnd2TagBfr, kWdAnd2TagAft, kLBigram, kRBigram, kPrevBigram,
    kNextBigram,
  };

  struct LexicalRule {
    int from = -1;  // -1: unconditional
    std::string x;
    Cmd cmd;
    int to;
  };

  struct ContextRule {
    int from;  // -1: any tag ("*")
    int to;
    Cmd cmd;
    std::string x, y;
    int xtag = -1, ytag = -1;
  };

  int Intern(std::string_view tag);
  int InitialTag(const std::string& word, bool* known) const;
  bool LexicalMatches(const LexicalRule& r, const std::string& word, const std::string& prev,
                      const std::string& next) const;

  std::vector<std::string> tags_;
  std::unordered_map<std::string, int> tag_index_;
  std::unordered_map<std::string, int> lexicon_;
  std::vector<LexicalRule> lexical_rules_;
  std::vector<ContextRule> context_rules_;
  int nn_ = 0, nnp_ = 0, cd_ = 0, boundary_ = 0;
};

TaggedDocument PosTag(const DocumentStructure& doc, const BrillTagger& tagger);

}  // namespace wikiqual

#endif  // WIKIQUAL_POS_TAGGER_H_
