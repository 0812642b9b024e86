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

#ifndef WIKIQUAL_STYLEFEAT_H_
#define WIKIQUAL_STYLEFEAT_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wikiqual/feature_vector.h"
#include "wikiqual/pos_tagger.h"
#include "wikiqual/quality_class.h"

namespace wikiqual {

// Part-of-speech categories over the Penn tagset.
bool IsPronounTag(std::string_view tag);      // PRP PRP$ WP WP$
bool IsArticle(std::string_view word, std::string_view tag);  // the/a/an under DT
bool IsDeterminer(std::string_view word, std::string_view tag);  // DT minus articles
bool IsNounTag(std::string_view tag);         // NN*
bool IsVerbTag(std::string_view tag);         // VB*
bool IsAdjectiveTag(std::string_view tag);    // JJ*
bool IsAdverbTag(std::string_view tag);       // RB*
bool IsToBe(std::string_view word);           // forms of "be", case-folded

// Number of passive constructions in one sentence: a form of "be",
// optionally followed by adverbs or further "be" forms, then a VBN.
int CountPassives(const std::vector<TaggedToken>& sentence);

// The 91 scalar style features, in registry order.
FeatureVector StyleScalarFeatures(const TaggedDocument& doc);

// Per-document trigram occurrence counts. Character trigrams are taken over
// each case-folded paragraph (spaces and punctuation kept); POS trigrams over
// the tag sequence of each sentence. Keys are packed code points / tag
// indices; lists are sorted by key.
struct TrigramProfile {
  std::vector<std::pair<uint64_t, int32_t>> char_counts;
  std::vector<std::pair<uint32_t, int32_t>> pos_counts;
  int64_t char_total = 0;
  int64_t pos_total = 0;

  nlohmann::json ToJson() const;
  static TrigramProfile FromJson(const nlohmann::json& j);
};

TrigramProfile ExtractTrigramProfile(const TaggedDocument& doc);

uint64_t PackCharTrigram(char32_t a, char32_t b, char32_t c);
std::string CharTrigramText(uint64_t key);
uint64_t CharTrigramKey(std::string_view text);  // throws std::invalid_argument
uint32_t PackPosTrigram(int a, int b, int c);
std::string PosTrigramText(uint32_t key);
uint32_t PosTrigramKey(std::string_view text);   // "DT NN VBZ"

// Pearson chi-square of the 2 x K table (trigram present / absent by class).
// present[k] = documents of class k containing the trigram, totals[k] =
// documents of class k. Cells with zero expected count contribute nothing.
double ChiSquare(std::span<const int64_t> present, std::span<const int64_t> totals);

struct ScoredTrigram {
  std::string text;
  uint64_t key = 0;
  double chi2 = 0.0;
};

// Top-m character and top-n POS trigrams by chi-square against the class
// label, sorted by descending score with ties broken by ascending text.
// Immutable once fitted.
class TrigramSelector {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<ScoredTrigram>& char_trigrams() const { return char_; }
  const std::vector<ScoredTrigram>& pos_trigrams() const { return pos_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  nlohmann::json ToJson() const;
  static TrigramSelector FromJson(const nlohmann::json& j);

 private:
  friend TrigramSelector FitTrigramSelector(std::span<const TrigramProfile* const>,
                                            std::span<const QualityClass>, int, int);
  int m_ = 0;
  int n_ = 0;
  std::vector<ScoredTrigram> char_;
  std::vector<ScoredTrigram> pos_;
  std::vector<std::string> warnings_;
};

// Throws DataError with fewer than two distinct labels or mismatched sizes.
// If m or n exceeds the trigram vocabulary the list is truncated and a
// warning recorded; trigram features still emit m + n columns.
TrigramSelector FitTrigramSelector(std::span<const TrigramProfile* const> docs,
                                   std::span<const QualityClass> labels, int m, int n);
TrigramSelector FitTrigramSelector(const std::vector<TrigramProfile>& docs,
                                   const std::vector<QualityClass>& labels, int m, int n);

// Relative frequency of each selected trigram (occurrences / all trigrams of
// that kind in the document). Always m + n features; unfilled slots are 0.
FeatureVector TrigramFeatures(const TrigramProfile& profile, const TrigramSelector& selector);
FeatureVector TrigramFeatures(const TaggedDocument& doc, const TrigramSelector& selector);

}  // namespace wikiqual

#endif  // WIKIQUAL_STYLEFEAT_H_
