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

#include "wikiqual/stylefeat.h"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "wikiqual/errors.h"
#include "wikiqual/registry.h"
#include "wikiqual/text_util.h"

namespace wikiqual {
namespace {

constexpr FeatureGroup kG = FeatureGroup::kStyle;

std::string Fold(std::string_view word) {
  std::string out;
  size_t pos = 0;
  while (pos < word.size()) AppendUtf8(FoldCase(DecodeUtf8(word, &pos)), &out);
  return out;
}

bool StartsWith(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

// Word classes counted by the "X / different X" blocks.
enum Cls { kNoun, kVerb, kPronoun, kAdjective, kAdverb, kCoord, kSubord, kNumCls };

std::array<bool, kNumCls> Classify(std::string_view tag) {
  std::array<bool, kNumCls> c{};
  c[kNoun] = IsNounTag(tag);
  c[kVerb] = IsVerbTag(tag);
  c[kPronoun] = IsPronounTag(tag);
  c[kAdjective] = IsAdjectiveTag(tag);
  c[kAdverb] = IsAdverbTag(tag);
  c[kCoord] = tag == "CC";
  c[kSubord] = tag == "IN";
  return c;
}

// Sentence-initial categories, in registry order. Disjoint by construction.
int InitialCategory(const TaggedToken& t) {
  if (IsPronounTag(t.tag)) return 0;
  if (IsArticle(t.word, t.tag)) return 1;
  if (t.tag == "CC") return 2;
  if (t.tag == "IN") return 3;
  if (IsDeterminer(t.word, t.tag)) return 4;
  if (IsAdjectiveTag(t.tag)) return 5;
  if (IsNounTag(t.tag)) return 6;
  if (IsAdverbTag(t.tag)) return 7;
  return -1;
}

constexpr std::array<const char*, 8> kInitialNames = {
    "pronoun", "article", "coordinating_conjunction", "subordinating_conjunction",
    "determiner", "adjective", "noun", "adverb"};

constexpr std::array<const char*, kNumCls> kClsNames = {
    "noun", "verb", "pronoun", "adjective", "adverb", "coordinating_conjunction",
    "subordinating_conjunction"};

// Counts for one sentence or the whole article.
struct Tally {
  double modal = 0, passive = 0, to_be = 0, words = 0;
  std::array<double, kNumCls> cls{};
  std::set<std::string> types;
  std::array<std::set<std::string>, kNumCls> cls_types;

  void Add(const std::vector<TaggedToken>& tokens) {
    for (const TaggedToken& t : tokens) {
      const std::string folded = Fold(t.word);
      const auto c = Classify(t.tag);
      words += 1;
      types.insert(folded);
      if (t.tag == "MD") modal += 1;
      if (c[kVerb] && IsToBe(folded)) to_be += 1;
      for (int k = 0; k < kNumCls; ++k) {
        if (!c[k]) continue;
        cls[k] += 1;
        cls_types[k].insert(folded);
      }
    }
    passive += CountPassives(tokens);
  }

  // Values of the 18 count bases, in registry order.
  std::array<double, 18> Bases() const {
    std::array<double, 18> b{};
    b[0] = modal;
    b[1] = passive;
    b[2] = to_be;
    b[3] = static_cast<double>(types.size());
    for (int k = 0; k < kNumCls; ++k) {
      b[4 + 2 * k] = cls[k];
      b[5 + 2 * k] = static_cast<double>(cls_types[k].size());
    }
    return b;
  }
};

std::array<std::string, 18> BaseNames() {
  std::array<std::string, 18> n;
  n[0] = "modal";
  n[1] = "passive_voice";
  n[2] = "to_be";
  n[3] = "different_word";
  for (int k = 0; k < kNumCls; ++k) {
    n[4 + 2 * k] = kClsNames[k];
    n[5 + 2 * k] = std::string("different_") + kClsNames[k];
  }
  return n;
}

}  // namespace

bool IsPronounTag(std::string_view tag) {
  return tag == "PRP" || tag == "PRP$" || tag == "WP" || tag == "WP$";
}

bool IsArticle(std::string_view word, std::string_view tag) {
  if (tag != "DT") return false;
  const std::string w = ToLowerAscii(word);
  return w == "the" || w == "a" || w == "an";
}

bool IsDeterminer(std::string_view word, std::string_view tag) {
  return tag == "DT" && !IsArticle(word, tag);
}

bool IsNounTag(std::string_view tag) { return StartsWith(tag, "NN"); }
// Modal auxiliaries are verbs too, so modal_per_verb stays within [0, 1].
bool IsVerbTag(std::string_view tag) { return StartsWith(tag, "VB") || tag == "MD"; }
bool IsAdjectiveTag(std::string_view tag) { return StartsWith(tag, "JJ"); }
bool IsAdverbTag(std::string_view tag) { return StartsWith(tag, "RB"); }

bool IsToBe(std::string_view word) {
  static const std::array<std::string_view, 12> kForms = {
      "am", "are", "aren't", "be", "been", "being", "is", "isn't", "was", "wasn't",
      "were", "weren't"};
  const std::string w = ToLowerAscii(word);
  return std::find(kForms.begin(), kForms.end(), w) != kForms.end();
}

int CountPassives(const std::vector<TaggedToken>& sentence) {
  int count = 0;
  size_t i = 0;
  while (i < sentence.size()) {
    const TaggedToken& t = sentence[i];
    if (!(IsVerbTag(t.tag) && IsToBe(t.word))) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < sentence.size() &&
           (IsAdverbTag(sentence[j].tag) ||
            (IsVerbTag(sentence[j].tag) && IsToBe(sentence[j].word)))) {
      ++j;
    }
    if (j < sentence.size() && sentence[j].tag == "VBN") {
      ++count;
      i = j + 1;
    } else {
      ++i;
    }
  }
  return count;
}

FeatureVector StyleScalarFeatures(const TaggedDocument& doc) {
  const double sentences = static_cast<double>(doc.sentences.size());
  std::vector<double> sizes;
  sizes.reserve(doc.sentences.size());
  double questions = 0, exclamations = 0;
  std::array<double, 8> initial{};
  Tally article;
  std::array<double, 18> per_sentence_sum{};
  double syllables = 0, characters = 0;

  for (const TaggedSentence& s : doc.sentences) {
    sizes.push_back(static_cast<double>(s.tokens.size()));
    if (s.terminator == '?') questions += 1;
    if (s.terminator == '!') exclamations += 1;
    if (!s.tokens.empty()) {
      const int cat = InitialCategory(s.tokens.front());
      if (cat >= 0) initial[cat] += 1;
    }
    Tally local;
    local.Add(s.tokens);
    const auto b = local.Bases();
    for (size_t k = 0; k < b.size(); ++k) per_sentence_sum[k] += b[k];
    article.Add(s.tokens);
    for (const TaggedToken& t : s.tokens) {
      syllables += t.syllables;
      characters += static_cast<double>(Utf8Length(t.word));
    }
  }

  double mean = 0, largest = 0, shortest = 0, large = 0, small = 0;
  if (!sizes.empty()) {
    for (double v : sizes) mean += v;
    mean /= sentences;
    largest = *std::max_element(sizes.begin(), sizes.end());
    shortest = *std::min_element(sizes.begin(), sizes.end());
    for (double v : sizes) {
      if (v >= mean + 10.0) large += 1;
      if (v <= mean - 5.0) small += 1;
    }
  }

  FeatureVector fv;
  fv.Add("mean_sentence_size", kG, mean);
  fv.Add("largest_sentence_size", kG, largest);
  fv.Add("shortest_sentence_size", kG, shortest);
  fv.Add("large_sentence_rate", kG, SafeRatio(large, sentences));
  fv.Add("short_sentence_rate", kG, SafeRatio(small, sentences));
  fv.Add("question_count", kG, questions);
  fv.Add("question_ratio", kG, SafeRatio(questions, sentences));
  fv.Add("exclamation_count", kG, exclamations);
  fv.Add("exclamation_ratio", kG, SafeRatio(exclamations, sentences));
  for (size_t k = 0; k < initial.size(); ++k) {
    fv.Add(std::string("sentence_start_") + kInitialNames[k] + "_count", kG, initial[k]);
  }
  for (size_t k = 0; k < initial.size(); ++k) {
    fv.Add(std::string("sentence_start_") + kInitialNames[k] + "_ratio", kG,
           SafeRatio(initial[k], sentences));
  }

  const auto names = BaseNames();
  const auto bases = article.Bases();
  const double words = article.words;
  for (size_t k = 0; k < bases.size(); ++k) fv.Add(names[k] + "_count", kG, bases[k]);
  for (size_t k = 0; k < bases.size(); ++k) {
    fv.Add(names[k] + "_per_sentence", kG, SafeRatio(per_sentence_sum[k], sentences));
  }
  for (size_t k = 0; k < bases.size(); ++k) {
    fv.Add(names[k] + "_per_word", kG, SafeRatio(bases[k], words));
  }
  const double verbs = article.cls[kVerb];
  fv.Add("modal_per_verb", kG, SafeRatio(article.modal, verbs));
  fv.Add("passive_voice_per_verb", kG, SafeRatio(article.passive, verbs));
  fv.Add("to_be_per_verb", kG, SafeRatio(article.to_be, verbs));
  const double types = static_cast<double>(article.types.size());
  for (int k = 0; k < kNumCls; ++k) {
    fv.Add(std::string("different_") + kClsNames[k] + "_per_different_word", kG,
           SafeRatio(static_cast<double>(article.cls_types[k].size()), types));
  }
  fv.Add("syllables_per_word", kG, SafeRatio(syllables, words));
  fv.Add("characters_per_word", kG, SafeRatio(characters, words));
  return fv;
}

// ---------------------------------------------------------------------------
// Trigrams

uint64_t PackCharTrigram(char32_t a, char32_t b, char32_t c) {
  return (static_cast<uint64_t>(a & 0x1FFFFF) << 42) | (static_cast<uint64_t>(b & 0x1FFFFF) << 21) |
         static_cast<uint64_t>(c & 0x1FFFFF);
}

std::string CharTrigramText(uint64_t key) {
  std::string out;
  AppendUtf8(static_cast<char32_t>((key >> 42) & 0x1FFFFF), &out);
  AppendUtf8(static_cast<char32_t>((key >> 21) & 0x1FFFFF), &out);
  AppendUtf8(static_cast<char32_t>(key & 0x1FFFFF), &out);
  return out;
}

uint64_t CharTrigramKey(std::string_view text) {
  std::array<char32_t, 3> cp{};
  size_t pos = 0;
  int n = 0;
  while (pos < text.size()) {
    if (n == 3) throw std::invalid_argument("character trigram longer than 3 code points");
    cp[n++] = DecodeUtf8(text, &pos);
  }
  if (n != 3) throw std::invalid_argument("character trigram shorter than 3 code points");
  return PackCharTrigram(cp[0], cp[1], cp[2]);
}

uint32_t PackPosTrigram(int a, int b, int c) {
  return (static_cast<uint32_t>(a) << 16) | (static_cast<uint32_t>(b) << 8) |
         static_cast<uint32_t>(c);
}

std::string PosTrigramText(uint32_t key) {
  const auto& tags = PennTagset();
  return tags.at((key >> 16) & 0xFF) + " " + tags.at((key >> 8) & 0xFF) + " " +
         tags.at(key & 0xFF);
}

uint32_t PosTrigramKey(std::string_view text) {
  std::array<int, 3> idx{};
  int n = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    if (n == 3) throw std::invalid_argument("POS trigram has more than 3 tags");
    const std::string_view tag = text.substr(start, end - start);
    const auto& set = PennTagset();
    if (std::find(set.begin(), set.end(), tag) == set.end()) {
      throw std::invalid_argument("unknown tag in POS trigram: " + std::string(tag));
    }
    idx[n++] = PennTagIndex(tag);
    start = end + 1;
  }
  if (n != 3) throw std::invalid_argument("POS trigram has fewer than 3 tags");
  return PackPosTrigram(idx[0], idx[1], idx[2]);
}

namespace {

template <typename K>
std::vector<std::pair<K, int32_t>> Sorted(const std::unordered_map<K, int32_t>& m) {
  std::vector<std::pair<K, int32_t>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TrigramProfile ExtractTrigramProfile(const TaggedDocument& doc) {
  TrigramProfile p;
  std::unordered_map<uint64_t, int32_t> chars;
  std::vector<char32_t> cps;
  for (const std::string& para : doc.paragraphs) {
    cps.clear();
    size_t pos = 0;
    while (pos < para.size()) cps.push_back(FoldCase(DecodeUtf8(para, &pos)));
    for (size_t i = 0; i + 2 < cps.size(); ++i) {
      ++chars[PackCharTrigram(cps[i], cps[i + 1], cps[i + 2])];
      ++p.char_total;
    }
  }
  std::unordered_map<uint32_t, int32_t> pos_counts;
  std::vector<int> tags;
  for (const TaggedSentence& s : doc.sentences) {
    tags.clear();
    for (const TaggedToken& t : s.tokens) tags.push_back(PennTagIndex(t.tag));
    for (size_t i = 0; i + 2 < tags.size(); ++i) {
      ++pos_counts[PackPosTrigram(tags[i], tags[i + 1], tags[i + 2])];
      ++p.pos_total;
    }
  }
  p.char_counts = Sorted(chars);
  p.pos_counts = Sorted(pos_counts);
  return p;
}

nlohmann::json TrigramProfile::ToJson() const {
  nlohmann::json j;
  j["char"] = char_counts;
  j["pos"] = pos_counts;
  j["char_total"] = char_total;
  j["pos_total"] = pos_total;
  return j;
}

TrigramProfile TrigramProfile::FromJson(const nlohmann::json& j) {
  TrigramProfile p;
  p.char_counts = j.at("char").get<std::vector<std::pair<uint64_t, int32_t>>>();
  p.pos_counts = j.at("pos").get<std::vector<std::pair<uint32_t, int32_t>>>();
  p.char_total = j.at("char_total").get<int64_t>();
  p.pos_total = j.at("pos_total").get<int64_t>();
  if (!std::is_sorted(p.char_counts.begin(), p.char_counts.end()) ||
      !std::is_sorted(p.pos_counts.begin(), p.pos_counts.end())) {
    throw DataError("trigram profile lists are not sorted by key");
  }
  return p;
}

double ChiSquare(std::span<const int64_t> present, std::span<const int64_t> totals) {
  double n = 0, p = 0;
  for (size_t k = 0; k < totals.size(); ++k) {
    n += static_cast<double>(totals[k]);
    p += static_cast<double>(present[k]);
  }
  if (n == 0) return 0.0;
  double chi2 = 0.0;
  for (size_t k = 0; k < totals.size(); ++k) {
    const double t = static_cast<double>(totals[k]);
    const double a = static_cast<double>(present[k]);
    const double e_present = t * p / n;
    const double e_absent = t * (n - p) / n;
    if (e_present > 0) chi2 += (a - e_present) * (a - e_present) / e_present;
    if (e_absent > 0) chi2 += ((t - a) - e_absent) * ((t - a) - e_absent) / e_absent;
  }
  return chi2;
}

namespace {

constexpr int kNumClasses = 7;
using ClassCounts = std::array<int64_t, kNumClasses>;

template <typename K, typename Getter, typename Text>
std::vector<ScoredTrigram> Rank(std::span<const TrigramProfile* const> docs,
                                std::span<const QualityClass> labels, const ClassCounts& totals,
                                int top, Getter get, Text text, std::vector<std::string>* warnings,
                                const char* kind) {
  std::unordered_map<K, ClassCounts> df;
  for (size_t d = 0; d < docs.size(); ++d) {
    const int cls = ToOrdinal(labels[d]);
    for (const auto& [key, count] : get(*docs[d])) {
      if (count > 0) ++df[key][cls];
    }
  }
  std::vector<ScoredTrigram> all;
  all.reserve(df.size());
  for (const auto& [key, present] : df) {
    all.push_back({text(key), static_cast<uint64_t>(key), ChiSquare(present, totals)});
  }
  auto better = [](const ScoredTrigram& a, const ScoredTrigram& b) {
    if (a.chi2 != b.chi2) return a.chi2 > b.chi2;
    return a.text < b.text;
  };
  if (static_cast<size_t>(top) > all.size()) {
    warnings->push_back(std::string("requested ") + std::to_string(top) + " " + kind +
                        " trigrams but the vocabulary has only " + std::to_string(all.size()));
    top = static_cast<int>(all.size());
  }
  std::partial_sort(all.begin(), all.begin() + top, all.end(), better);
  all.resize(top);
  return all;
}

}  // namespace

TrigramSelector FitTrigramSelector(std::span<const TrigramProfile* const> docs,
                                   std::span<const QualityClass> labels, int m, int n) {
  if (docs.size() != labels.size()) {
    throw DataError("trigram selector: " + std::to_string(docs.size()) + " documents but " +
                    std::to_string(labels.size()) + " labels");
  }
  if (m < 1 || n < 1) throw UsageError("trigram selector: m and n must be positive");
  ClassCounts totals{};
  for (QualityClass c : labels) ++totals[ToOrdinal(c)];
  int distinct = 0;
  for (int64_t t : totals) distinct += t > 0;
  if (distinct < 2) throw DataError("trigram selector needs at least two distinct labels");

  TrigramSelector sel;
  sel.m_ = m;
  sel.n_ = n;
  sel.char_ = Rank<uint64_t>(
      docs, labels, totals, m, [](const TrigramProfile& p) -> const auto& { return p.char_counts; },
      CharTrigramText, &sel.warnings_, "character");
  sel.pos_ = Rank<uint32_t>(
      docs, labels, totals, n, [](const TrigramProfile& p) -> const auto& { return p.pos_counts; },
      PosTrigramText, &sel.warnings_, "POS");
  return sel;
}

TrigramSelector FitTrigramSelector(const std::vector<TrigramProfile>& docs,
                                   const std::vector<QualityClass>& labels, int m, int n) {
  std::vector<const TrigramProfile*> ptrs;
  ptrs.reserve(docs.size());
  for (const TrigramProfile& p : docs) ptrs.push_back(&p);
  return FitTrigramSelector(std::span<const TrigramProfile* const>(ptrs),
                            std::span<const QualityClass>(labels), m, n);
}

nlohmann::json TrigramSelector::ToJson() const {
  auto list = [](const std::vector<ScoredTrigram>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const ScoredTrigram& t : v) a.push_back({{"trigram", t.text}, {"chi2", t.chi2}});
    return a;
  };
  return {{"format", "wikiqual-trigram-selector"},
          {"version", 1},
          {"m", m_},
          {"n", n_},
          {"char_trigrams", list(char_)},
          {"pos_trigrams", list(pos_)},
          {"warnings", warnings_}};
}

TrigramSelector TrigramSelector::FromJson(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "wikiqual-trigram-selector") {
      throw DataError("not a trigram selector file");
    }
    TrigramSelector sel;
    sel.m_ = j.at("m").get<int>();
    sel.n_ = j.at("n").get<int>();
    for (const auto& t : j.at("char_trigrams")) {
      const std::string text = t.at("trigram").get<std::string>();
      sel.char_.push_back({text, CharTrigramKey(text), t.at("chi2").get<double>()});
    }
    for (const auto& t : j.at("pos_trigrams")) {
      const std::string text = t.at("trigram").get<std::string>();
      sel.pos_.push_back({text, PosTrigramKey(text), t.at("chi2").get<double>()});
    }
    if (j.contains("warnings")) sel.warnings_ = j.at("warnings").get<std::vector<std::string>>();
    if (sel.m_ < 1 || sel.n_ < 1 || static_cast<int>(sel.char_.size()) > sel.m_ ||
        static_cast<int>(sel.pos_.size()) > sel.n_) {
      throw DataError("trigram selector: inconsistent m, n and list sizes");
    }
    return sel;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed trigram selector: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("malformed trigram selector: ") + e.what());
  }
}

namespace {

template <typename K>
int32_t Lookup(const std::vector<std::pair<K, int32_t>>& v, K key) {
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(key, INT32_MIN));
  return it != v.end() && it->first == key ? it->second : 0;
}

}  // namespace

FeatureVector TrigramFeatures(const TrigramProfile& profile, const TrigramSelector& selector) {
  FeatureVector fv;
  const auto& chars = selector.char_trigrams();
  for (int i = 0; i < selector.m(); ++i) {
    double v = 0.0;
    if (i < static_cast<int>(chars.size())) {
      v = SafeRatio(Lookup(profile.char_counts, chars[i].key),
                    static_cast<double>(profile.char_total));
    }
    fv.Add(CharTrigramColumn(i), kG, v);
  }
  const auto& pos = selector.pos_trigrams();
  for (int i = 0; i < selector.n(); ++i) {
    double v = 0.0;
    if (i < static_cast<int>(pos.size())) {
      v = SafeRatio(Lookup(profile.pos_counts, static_cast<uint32_t>(pos[i].key)),
                    static_cast<double>(profile.pos_total));
    }
    fv.Add(PosTrigramColumn(i), kG, v);
  }
  return fv;
}

FeatureVector TrigramFeatures(const TaggedDocument& doc, const TrigramSelector& selector) {
  return TrigramFeatures(ExtractTrigramProfile(doc), selector);
}

}  // namespace wikiqual
