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

#ifndef WIKIQUAL_DOCUMENT_H_
#define WIKIQUAL_DOCUMENT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace wikiqual {

struct Sentence {
  std::vector<std::string> tokens;
  // '.', '!', '?' or '\0' when the sentence ends at a paragraph boundary
  // without terminal punctuation.
  char terminator = '\0';
};

// One heading and the text up to the next heading of any depth. Depth 1 is
// a "== X ==" section, depth 2 a "=== X ===" subsection and so on.
struct Section {
  std::string title;
  int depth = 1;
  int parent = -1;  // index into DocumentStructure::sections, -1 for top level
  std::string body_text;
  int64_t char_size = 0;  // own body only, excluding child sections
};

struct DocumentStructure {
  std::string abstract_text;
  int64_t abstract_size = 0;
  std::vector<Section> sections;  // document order

  std::vector<std::string> paragraphs;
  std::vector<Sentence> sentences;
  std::vector<std::string> tokens;
  std::vector<int> syllable_counts;

  int64_t citation_count = 0;
  int64_t external_link_count = 0;
  int64_t internal_link_count = 0;
  int64_t image_count = 0;

  // Unbalanced or unterminated markup that the parser recovered from.
  int64_t anomaly_count = 0;

  // Paragraphs joined by "\n\n".
  std::string plain_text;
  // Sum of paragraph lengths in code points; paragraph separators are not
  // counted. Equals abstract_size + sum of Section::char_size.
  int64_t character_count = 0;

  int64_t SyllableTotal() const;
};

}  // namespace wikiqual

#endif  // WIKIQUAL_DOCUMENT_H_
