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

#ifndef WIKIQUAL_READABILITY_H_
#define WIKIQUAL_READABILITY_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>

#include "wikiqual/document.h"
#include "wikiqual/feature_vector.h"

namespace wikiqual {

struct ReadabilityCounts {
  int64_t characters = 0;  // letters and digits only
  int64_t words = 0;
  int64_t sentences = 0;
  int64_t syllables = 0;
  int64_t complex_words = 0;  // three or more syllables
  int64_t long_words = 0;     // more than six characters
  int64_t difficult_words = 0;  // not on the familiar-word list
  int64_t polysyllables = 0;  // three or more syllables (SMOG)
};

// Dale-Chall familiar words, case-folded. Membership tries the word itself,
// then simple plural, past-tense and possessive reductions.
class FamiliarWordList {
 public:
  static FamiliarWordList LoadFromFile(const std::string& path);
  static FamiliarWordList Load(std::istream& in);

  bool IsFamiliar(std::string_view word) const;
  size_t size() const { return words_.size(); }

 private:
  bool Contains(const std::string& w) const { return words_.count(w) != 0; }
  std::unordered_set<std::string> words_;
};

ReadabilityCounts CountReadability(const DocumentStructure& doc, const FamiliarWordList& familiar);

// The eight indices, in registry order. All zero when words or sentences is 0.
FeatureVector ReadabilityFeatures(const ReadabilityCounts& c);

// Individual formulas; callers guarantee words > 0 and sentences > 0.
double AutomatedReadabilityIndex(const ReadabilityCounts& c);
double ColemanLiauIndex(const ReadabilityCounts& c);
double FleschReadingEase(const ReadabilityCounts& c);
double FleschKincaidGrade(const ReadabilityCounts& c);
double GunningFogIndex(const ReadabilityCounts& c);
double Lix(const ReadabilityCounts& c);
double SmogGrade(const ReadabilityCounts& c);
double DaleChallScore(const ReadabilityCounts& c);

}  // namespace wikiqual

#endif  // WIKIQUAL_READABILITY_H_
