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

#ifndef WIKIQUAL_SEGMENT_H_
#define WIKIQUAL_SEGMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "wikiqual/document.h"

namespace wikiqual {

// Version of the compiled-in abbreviation list used by the sentence splitter.
inline constexpr int kAbbreviationListVersion = 1;

// True if `word` (including its trailing period, e.g. "Dr.") never ends a
// sentence. Single capital initials ("J.") are also treated as abbreviations.
bool IsAbbreviation(std::string_view word);

struct Segmentation {
  std::vector<std::string> paragraphs;
  std::vector<Sentence> sentences;
  std::vector<std::string> tokens;
  std::vector<int> syllable_counts;
};

// Splits plain text into paragraphs (blank-line separated, whitespace
// collapsed), sentences, word tokens and per-token syllable counts. Total:
// any byte sequence is accepted.
Segmentation Segment(std::string_view plain_text);

// Paragraph split only; each paragraph is whitespace-collapsed and empty
// paragraphs are dropped.
std::vector<std::string> SplitParagraphs(std::string_view text);

// Sentence split of a single paragraph.
std::vector<Sentence> SplitSentences(std::string_view paragraph);

std::vector<std::string> Tokenize(std::string_view text);

// Vowel-group heuristic: groups of a/e/i/o/u/y, minus a silent trailing 'e'
// (kept after consonant + 'l'), minimum 1.
int CountSyllables(std::string_view word);

}  // namespace wikiqual

#endif  // WIKIQUAL_SEGMENT_H_
