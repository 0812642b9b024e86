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

#include "wikiqual/segment.h"

#include <algorithm>
#include <array>

#include "wikiqual/text_util.h"

namespace wikiqual {

namespace {

// Sorted; binary-searched by IsAbbreviation. Bump kAbbreviationListVersion
// whenever this list changes.
constexpr std::array<std::string_view, 74> kAbbreviations = {
    "Adm.",  "Apr.",  "Aug.",  "Ave.",   "Brig.", "Bros.", "Capt.", "Cdr.",
    "Cmdr.", "Co.",   "Col.",  "Corp.",  "Cpl.",  "Dec.",  "Dr.",   "Feb.",
    "Fig.",  "Fr.",   "Ft.",   "Gen.",   "Gov.",  "Hon.",  "Inc.",  "Jan.",
    "Jr.",   "Jul.",  "Jun.",  "Lt.",    "Ltd.",  "Maj.",  "Mar.",  "Messrs.",
    "Mr.",   "Mrs.",  "Ms.",   "Mt.",    "No.",   "Nos.",  "Nov.",  "Oct.",
    "Op.",   "Pres.", "Prof.", "Pte.",   "Pvt.",  "Rep.",  "Rev.",  "Sen.",
    "Sep.",  "Sept.", "Sgt.",  "Sr.",    "St.",   "U.K.",  "U.N.",  "U.S.",
    "Vol.",  "approx.", "c.",  "ca.",    "cf.",   "e.g.",  "ed.",   "eds.",
    "est.",  "fl.",   "i.e.",  "no.",    "op.",   "p.",    "pp.",   "r.",
    "viz.",  "vs."};

bool IsTerminal(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

bool IsCloser(char32_t cp) {
  return cp == ')' || cp == ']' || cp == '"' || cp == '\'' || cp == 0x201D ||
         cp == 0x2019 || cp == 0xBB;
}

bool IsOpener(char32_t cp) {
  return cp == '(' || cp == '[' || cp == '"' || cp == '\'' || cp == 0x201C ||
         cp == 0x2018 || cp == 0xAB;
}

bool IsJoiner(char32_t cp) {
  return cp == '\'' || cp == 0x2019 || cp == '-' || cp == '.' || cp == ',';
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

// The whitespace-delimited word ending at `end` (exclusive), with leading
// opening punctuation removed.
std::string_view WordBefore(std::string_view s, size_t end) {
  size_t begin = end;
  while (begin > 0 && s[begin - 1] != ' ') --begin;
  while (begin < end && (s[begin] == '(' || s[begin] == '[' || s[begin] == '"' ||
                         s[begin] == '\'')) {
    ++begin;
  }
  return s.substr(begin, end - begin);
}

void PushSentence(std::string_view text, char terminator, std::vector<Sentence>* out) {
  Sentence sentence;
  sentence.tokens = Tokenize(text);
  if (sentence.tokens.empty()) return;
  sentence.terminator = terminator;
  out->push_back(std::move(sentence));
}

}  // namespace

bool IsAbbreviation(std::string_view word) {
  if (word.size() == 2 && word[1] == '.' && word[0] >= 'A' && word[0] <= 'Z') {
    return true;
  }
  return std::binary_search(kAbbreviations.begin(), kAbbreviations.end(), word);
}

std::vector<std::string> SplitParagraphs(std::string_view text) {
  std::vector<std::string> paragraphs;
  std::string current;
  auto flush = [&] {
    std::string collapsed = CollapseWhitespace(current);
    if (!collapsed.empty()) paragraphs.push_back(std::move(collapsed));
    current.clear();
  };
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (Trim(line).empty()) {
      flush();
    } else {
      current.append(line);
      current.push_back('\n');
    }
    pos = eol + 1;
  }
  flush();
  return paragraphs;
}

std::vector<Sentence> SplitSentences(std::string_view s) {
  std::vector<Sentence> sentences;
  size_t start = 0;
  size_t i = 0;
  while (i < s.size()) {
    size_t next = i;
    const char32_t cp = DecodeUtf8(s, &next);
    if (!IsTerminal(cp)) {
      i = next;
      continue;
    }
    const char terminator = static_cast<char>(cp);
    size_t j = next;
    while (j < s.size()) {
      size_t k = j;
      const char32_t c = DecodeUtf8(s, &k);
      if (!IsTerminal(c)) break;
      j = k;
    }
    while (j < s.size()) {
      size_t k = j;
      const char32_t c = DecodeUtf8(s, &k);
      if (!IsCloser(c)) break;
      j = k;
    }
    bool boundary = false;
    size_t resume = j;
    if (j >= s.size()) {
      boundary = true;
    } else if (s[j] == ' ') {
      size_t k = j + 1;
      while (k < s.size()) {
        size_t m = k;
        const char32_t c = DecodeUtf8(s, &m);
        if (!IsOpener(c)) break;
        k = m;
      }
      if (k < s.size()) {
        size_t m = k;
        boundary = IsUpper(DecodeUtf8(s, &m));
      }
      resume = j + 1;
    }
    if (boundary && terminator == '.' && next == i + 1 &&
        IsAbbreviation(WordBefore(s, i + 1))) {
      boundary = false;
    }
    if (boundary) {
      PushSentence(s.substr(start, j - start), terminator, &sentences);
      start = resume;
    }
    i = j;
  }
  if (start < s.size()) PushSentence(s.substr(start), '\0', &sentences);
  return sentences;
}

std::vector<std::string> Tokenize(std::string_view s) {
  std::vector<std::string> tokens;
  std::string current;
  char32_t prev = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = DecodeUtf8(s, &pos);
    if (IsWordChar(cp)) {
      AppendUtf8(cp, &current);
      prev = cp;
      continue;
    }
    if (!current.empty() && IsJoiner(cp) && pos < s.size()) {
      size_t peek = pos;
      const char32_t after = DecodeUtf8(s, &peek);
      bool joins = IsWordChar(after);
      if (cp == ',') joins = IsDigit(prev) && IsDigit(after);
      if (cp == '.') joins = IsAsciiAlnum(prev) && IsAsciiAlnum(after);
      if (joins) {
        current.push_back(cp == 0x2019 ? '\'' : static_cast<char>(cp));
        prev = cp;
        continue;
      }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
    prev = cp;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

int CountSyllables(std::string_view word) {
  std::string w;
  w.reserve(word.size());
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c >= 'a' && c <= 'z') w.push_back(c);
  }
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const size_t n = w.size();
  if (n >= 2 && w[n - 1] == 'e' && !is_vowel(w[n - 2])) {
    const bool consonant_le = n >= 3 && w[n - 2] == 'l' && !is_vowel(w[n - 3]);
    if (!consonant_le) --groups;
  }
  return std::max(groups, 1);
}

Segmentation Segment(std::string_view plain_text) {
  Segmentation seg;
  seg.paragraphs = SplitParagraphs(plain_text);
  for (const std::string& p : seg.paragraphs) {
    std::vector<Sentence> sentences = SplitSentences(p);
    for (Sentence& sentence : sentences) {
      for (const std::string& token : sentence.tokens) {
        seg.tokens.push_back(token);
        seg.syllable_counts.push_back(CountSyllables(token));
      }
      seg.sentences.push_back(std::move(sentence));
    }
  }
  return seg;
}

}  // namespace wikiqual
