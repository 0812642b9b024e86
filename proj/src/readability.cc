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

#include "wikiqual/readability.h"

#include <cmath>
#include <fstream>

#include "wikiqual/errors.h"
#include "wikiqual/text_util.h"

namespace wikiqual {

FamiliarWordList FamiliarWordList::LoadFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open familiar-word list " + path);
  return Load(in);
}

FamiliarWordList FamiliarWordList::Load(std::istream& in) {
  FamiliarWordList list;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view w = Trim(line);
    if (w.empty() || w.front() == '#') continue;
    list.words_.insert(ToLowerAscii(w));
  }
  return list;
}

namespace {

bool EndsWith(const std::string& s, std::string_view suffix) {
  return s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string Chop(const std::string& s, size_t n) { return s.substr(0, s.size() - n); }

}  // namespace

bool FamiliarWordList::IsFamiliar(std::string_view word) const {
  if (word.empty()) return true;
  if (word.front() >= '0' && word.front() <= '9') return true;
  std::string w;
  size_t pos = 0;
  while (pos < word.size()) AppendUtf8(FoldCase(DecodeUtf8(word, &pos)), &w);
  if (Contains(w)) return true;
  if (EndsWith(w, "'s")) {
    w = Chop(w, 2);
    if (Contains(w)) return true;
  } else if (EndsWith(w, "'")) {
    w = Chop(w, 1);
    if (Contains(w)) return true;
  }
  if (EndsWith(w, "ies") && Contains(Chop(w, 3) + "y")) return true;
  if (EndsWith(w, "es") && Contains(Chop(w, 2))) return true;
  if (EndsWith(w, "s") && Contains(Chop(w, 1))) return true;
  if (EndsWith(w, "ied") && Contains(Chop(w, 3) + "y")) return true;
  if (EndsWith(w, "ed") && Contains(Chop(w, 2))) return true;
  if (EndsWith(w, "d") && Contains(Chop(w, 1))) return true;
  return false;
}

ReadabilityCounts CountReadability(const DocumentStructure& doc, const FamiliarWordList& familiar) {
  ReadabilityCounts c;
  c.sentences = static_cast<int64_t>(doc.sentences.size());
  c.words = static_cast<int64_t>(doc.tokens.size());
  for (size_t i = 0; i < doc.tokens.size(); ++i) {
    const std::string& tok = doc.tokens[i];
    int64_t chars = 0;
    size_t pos = 0;
    while (pos < tok.size()) chars += IsWordChar(DecodeUtf8(tok, &pos)) ? 1 : 0;
    const int syl = doc.syllable_counts[i];
    c.characters += chars;
    c.syllables += syl;
    if (syl >= 3) {
      ++c.complex_words;
      ++c.polysyllables;
    }
    if (chars > 6) ++c.long_words;
    if (!familiar.IsFamiliar(tok)) ++c.difficult_words;
  }
  return c;
}

namespace {

double D(int64_t v) { return static_cast<double>(v); }

}  // namespace

// Senter & Smith (1967).
double AutomatedReadabilityIndex(const ReadabilityCounts& c) {
  return 4.71 * D(c.characters) / D(c.words) + 0.5 * D(c.words) / D(c.sentences) - 21.43;
}

// Coleman & Liau (1975); L and S per 100 words.
double ColemanLiauIndex(const ReadabilityCounts& c) {
  const double l = 100.0 * D(c.characters) / D(c.words);
  const double s = 100.0 * D(c.sentences) / D(c.words);
  return 0.0588 * l - 0.296 * s - 15.8;
}

// Flesch (1948).
double FleschReadingEase(const ReadabilityCounts& c) {
  return 206.835 - 1.015 * D(c.words) / D(c.sentences) - 84.6 * D(c.syllables) / D(c.words);
}

// Kincaid et al. (1975).
double FleschKincaidGrade(const ReadabilityCounts& c) {
  return 0.39 * D(c.words) / D(c.sentences) + 11.8 * D(c.syllables) / D(c.words) - 15.59;
}

// Gunning (1952).
double GunningFogIndex(const ReadabilityCounts& c) {
  return 0.4 * (D(c.words) / D(c.sentences) + 100.0 * D(c.complex_words) / D(c.words));
}

// Björnsson (1968).
double Lix(const ReadabilityCounts& c) {
  return D(c.words) / D(c.sentences) + 100.0 * D(c.long_words) / D(c.words);
}

// McLaughlin (1969), normalized to 30 sentences.
double SmogGrade(const ReadabilityCounts& c) {
  return 1.0430 * std::sqrt(D(c.polysyllables) * 30.0 / D(c.sentences)) + 3.1291;
}

// Chall & Dale (1995).
double DaleChallScore(const ReadabilityCounts& c) {
  const double pdw = 100.0 * D(c.difficult_words) / D(c.words);
  double score = 0.1579 * pdw + 0.0496 * D(c.words) / D(c.sentences);
  if (pdw > 5.0) score += 3.6365;
  return score;
}

FeatureVector ReadabilityFeatures(const ReadabilityCounts& c) {
  const bool ok = c.words > 0 && c.sentences > 0;
  auto v = [ok, &c](double (*f)(const ReadabilityCounts&)) { return ok ? f(c) : 0.0; };
  constexpr FeatureGroup g = FeatureGroup::kReadability;
  FeatureVector fv;
  fv.Add("automated_readability_index", g, v(AutomatedReadabilityIndex));
  fv.Add("coleman_liau_index", g, v(ColemanLiauIndex));
  fv.Add("flesch_reading_ease", g, v(FleschReadingEase));
  fv.Add("flesch_kincaid_grade", g, v(FleschKincaidGrade));
  fv.Add("gunning_fog_index", g, v(GunningFogIndex));
  fv.Add("lix", g, v(Lix));
  fv.Add("smog_grade", g, v(SmogGrade));
  fv.Add("dale_chall_score", g, v(DaleChallScore));
  return fv;
}

}  // namespace wikiqual
