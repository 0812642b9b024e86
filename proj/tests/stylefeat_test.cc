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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "oracles.h"
#include "test_util.h"
#include "wikiqual/errors.h"
#include "wikiqual/pos_tagger.h"
#include "wikiqual/registry.h"
#include "wikiqual/segment.h"
#include "wikiqual/stylefeat.h"
#include "wikiqual/wikitext.h"

using namespace wikiqual;

namespace {

const BrillTagger& Tagger() {
  static const BrillTagger tagger =
      BrillTagger::LoadFromDirectory(std::string(WIKIQUAL_DATA_DIR) + "/brill");
  return tagger;
}

// "word/TAG word/TAG ..." into one tagged sentence.
TaggedSentence Gold(const std::string& line, char terminator) {
  TaggedSentence s;
  s.terminator = terminator;
  std::istringstream in(line);
  std::string pair;
  while (in >> pair) {
    const size_t slash = pair.rfind('/');
    TaggedToken t;
    t.word = pair.substr(0, slash);
    t.tag = pair.substr(slash + 1);
    t.syllables = CountSyllables(t.word);
    s.tokens.push_back(t);
  }
  return s;
}

// Five hand-tagged sentences of 3, 20, 8, 9 and 4 words.
TaggedDocument GoldFixture() {
  TaggedDocument d;
  d.sentences = {
      Gold("Was/VBD it/PRP broken/VBN", '?'),
      Gold("The/DT old/JJ bridge/NN was/VBD quickly/RB rebuilt/VBN after/IN the/DT flood/NN "
           "and/CC the/DT town/NN could/MD finally/RB trade/VB with/IN its/PRP$ "
           "neighbours/NNS again/RB today/NN",
           '.'),
      Gold("She/PRP has/VBZ been/VBN seen/VBN near/IN the/DT river/NN twice/RB", '.'),
      Gold("Some/DT rivers/NNS are/VBP not/RB being/VBG cleaned/VBN by/IN the/DT city/NN", '.'),
      Gold("Stop/VB it/PRP now/RB Anna/NNP", '!'),
  };
  return d;
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool Prefix(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

// Recount of every style scalar straight from the rules, over ASCII text.
std::map<std::string, double> StyleOracle(const TaggedDocument& doc) {
  static const std::set<std::string> kBe = {"am", "are", "aren't", "be", "been", "being",
                                           "is", "isn't", "was", "wasn't", "were", "weren't"};
  const std::vector<std::pair<std::string, std::function<bool(const std::string&)>>> kClasses = {
      {"noun", [](const std::string& t) { return Prefix(t, "NN"); }},
      {"verb", [](const std::string& t) { return Prefix(t, "VB") || t == "MD"; }},
      {"pronoun",
       [](const std::string& t) { return t == "PRP" || t == "PRP$" || t == "WP" || t == "WP$"; }},
      {"adjective", [](const std::string& t) { return Prefix(t, "JJ"); }},
      {"adverb", [](const std::string& t) { return Prefix(t, "RB"); }},
      {"coordinating_conjunction", [](const std::string& t) { return t == "CC"; }},
      {"subordinating_conjunction", [](const std::string& t) { return t == "IN"; }},
  };
  auto is_verb = kClasses[1].second;

  // Per-sentence and whole-document base values.
  auto bases = [&](const std::vector<TaggedToken>& toks) {
    std::map<std::string, double> b;
    std::set<std::string> types;
    std::string pattern;
    for (const TaggedToken& t : toks) {
      const std::string w = Lower(t.word);
      types.insert(w);
      if (t.tag == "MD") b["modal"] += 1;
      const bool be = is_verb(t.tag) && kBe.count(w);
      if (be) b["to_be"] += 1;
      pattern += be ? 'B' : Prefix(t.tag, "RB") ? 'R' : t.tag == "VBN" ? 'N' : 'x';
    }
    // Passive: a be-verb, then adverbs or be-verbs, then a past participle.
    static const std::regex kPassive("B[RB]*N");
    b["passive_voice"] = static_cast<double>(
        std::distance(std::sregex_iterator(pattern.begin(), pattern.end(), kPassive),
                      std::sregex_iterator()));
    b["different_word"] = static_cast<double>(types.size());
    for (const auto& [name, pred] : kClasses) {
      std::set<std::string> cls_types;
      for (const TaggedToken& t : toks) {
        if (!pred(t.tag)) continue;
        b[name] += 1;
        cls_types.insert(Lower(t.word));
      }
      b["different_" + name] = static_cast<double>(cls_types.size());
    }
    return b;
  };

  std::map<std::string, double> out;
  std::vector<TaggedToken> all;
  std::vector<double> sizes;
  std::map<std::string, double> per_sentence;
  double questions = 0, exclamations = 0;
  for (const TaggedSentence& s : doc.sentences) {
    all.insert(all.end(), s.tokens.begin(), s.tokens.end());
    sizes.push_back(static_cast<double>(s.tokens.size()));
    questions += s.terminator == '?';
    exclamations += s.terminator == '!';
    for (auto& [k, v] : bases(s.tokens)) per_sentence[k] += v;
    const TaggedToken& first = s.tokens.front();
    const std::string w = Lower(first.word);
    const bool article = first.tag == "DT" && (w == "the" || w == "a" || w == "an");
    std::string cat;
    if (kClasses[2].second(first.tag)) cat = "pronoun";
    else if (article) cat = "article";
    else if (first.tag == "CC") cat = "coordinating_conjunction";
    else if (first.tag == "IN") cat = "subordinating_conjunction";
    else if (first.tag == "DT") cat = "determiner";
    else if (Prefix(first.tag, "JJ")) cat = "adjective";
    else if (Prefix(first.tag, "NN")) cat = "noun";
    else if (Prefix(first.tag, "RB")) cat = "adverb";
    if (!cat.empty()) out["sentence_start_" + cat + "_count"] += 1;
  }
  const double n = static_cast<double>(sizes.size());
  double mean = 0;
  for (double v : sizes) mean += v / n;
  out["mean_sentence_size"] = mean;
  out["largest_sentence_size"] = *std::max_element(sizes.begin(), sizes.end());
  out["shortest_sentence_size"] = *std::min_element(sizes.begin(), sizes.end());
  out["large_sentence_rate"] =
      static_cast<double>(std::count_if(sizes.begin(), sizes.end(), [&](double v) { return v >= mean + 10; })) / n;
  out["short_sentence_rate"] =
      static_cast<double>(std::count_if(sizes.begin(), sizes.end(), [&](double v) { return v <= mean - 5; })) / n;
  out["question_count"] = questions;
  out["question_ratio"] = questions / n;
  out["exclamation_count"] = exclamations;
  out["exclamation_ratio"] = exclamations / n;
  for (const char* c : {"pronoun", "article", "coordinating_conjunction", "subordinating_conjunction",
                        "determiner", "adjective", "noun", "adverb"}) {
    const std::string key = std::string("sentence_start_") + c;
    out[key + "_ratio"] = out[key + "_count"] / n;
  }
  auto doc_bases = bases(all);
  const double words = static_cast<double>(all.size());
  for (auto& [k, v] : doc_bases) {
    out[k + "_count"] = v;
    out[k + "_per_word"] = v / words;
    out[k + "_per_sentence"] = per_sentence[k] / n;
  }
  for (const char* k : {"modal", "passive_voice", "to_be"}) {
    out[std::string(k) + "_per_verb"] = doc_bases[k] / doc_bases["verb"];
  }
  for (const auto& [name, pred] : kClasses) {
    out["different_" + name + "_per_different_word"] =
        doc_bases["different_" + name] / doc_bases["different_word"];
  }
  double syl = 0, chars = 0;
  for (const TaggedToken& t : all) {
    syl += CountSyllables(t.word);
    chars += static_cast<double>(t.word.size());
  }
  out["syllables_per_word"] = syl / words;
  out["characters_per_word"] = chars / words;
  return out;
}

TaggedDocument DocFromText(const std::vector<std::string>& paragraphs) {
  std::string text;
  for (const std::string& p : paragraphs) text += p + "\n\n";
  return PosTag(ParseWikitext(text), Tagger());
}

}  // namespace

TEST_CASE("tagger basics") {
  CHECK(Tagger().Tag({"The", "cat", "sleeps"}) == std::vector<std::string>{"DT", "NN", "VBZ"});
  CHECK(Tagger().Tag({"quickly"}) == std::vector<std::string>{"RB"});
  CHECK(Tagger().Tag({"zzgrfl"}) == std::vector<std::string>{"NN"});
}

TEST_CASE("tagger accuracy on the gold sample is at least 90%") {
  std::istringstream in(testing::ReadFile(testing::TestDataPath("pos_gold.txt")));
  std::string line;
  size_t total = 0, correct = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const TaggedSentence gold = Gold(line, '.');
    std::vector<std::string> words;
    for (const TaggedToken& t : gold.tokens) words.push_back(t.word);
    const std::vector<std::string> tags = Tagger().Tag(words);
    for (size_t i = 0; i < tags.size(); ++i) {
      ++total;
      correct += tags[i] == gold.tokens[i].tag;
    }
  }
  CHECK(total >= 1000);
  const double accuracy = static_cast<double>(correct) / static_cast<double>(total);
  MESSAGE("tagger accuracy " << accuracy << " over " << total << " tokens");
  CHECK(accuracy >= 0.90);
}

TEST_CASE("sentence length rates use the inclusive thresholds") {
  TaggedDocument d;
  d.sentences = {Gold("a/DT b/NN c/VBZ d/NN", '.'),
                 Gold("a/DT b/NN c/NN d/NN e/NN f/NN g/NN h/NN i/NN j/NN k/NN l/NN m/NN n/NN o/NN "
                      "p/NN q/NN r/NN s/NN t/NN u/NN v/NN w/NN x/NN",
                      '.')};
  const FeatureVector fv = StyleScalarFeatures(d);
  CHECK(fv.at("mean_sentence_size") == 14.0);
  CHECK(fv.at("large_sentence_rate") == 0.5);
  CHECK(fv.at("short_sentence_rate") == 0.5);
}

TEST_CASE("questions and exclamations") {
  const FeatureVector fv = StyleScalarFeatures(DocFromText({"Is it true? Yes!"}));
  CHECK(fv.at("question_count") == 1);
  CHECK(fv.at("question_ratio") == 0.5);
  CHECK(fv.at("exclamation_count") == 1);
  CHECK(fv.at("exclamation_ratio") == 0.5);
}

TEST_CASE("passive voice and forms of be") {
  auto passives = [](const std::string& line) { return CountPassives(Gold(line, '.').tokens); };
  CHECK(passives("The/DT bridge/NN was/VBD rebuilt/VBN") == 1);
  CHECK(passives("It/PRP was/VBD not/RB being/VBG cleaned/VBN") == 1);
  CHECK(passives("It/PRP was/VBD red/JJ") == 0);
  CHECK(passives("They/PRP have/VBP rebuilt/VBN it/PRP") == 0);
  CHECK(passives("It/PRP was/VBD made/VBN and/CC was/VBD sold/VBN") == 2);
  TaggedDocument d;
  d.sentences = {Gold("Be/NN is/VBZ a/DT metal/NN", '.')};
  CHECK(StyleScalarFeatures(d).at("to_be_count") == 1);
}

TEST_CASE("all 91 style scalars equal a brute-force recount over gold tags") {
  const TaggedDocument doc = GoldFixture();
  const FeatureVector fv = StyleScalarFeatures(doc);
  const std::map<std::string, double> expected = StyleOracle(doc);
  REQUIRE(fv.size() == 91);
  for (const Feature& f : fv) {
    INFO(f.name);
    const auto it = expected.find(f.name);
    const double want = it == expected.end() ? 0.0 : it->second;
    CHECK(f.value == doctest::Approx(want).epsilon(1e-12));
  }
  // Spot values worked out by hand.
  CHECK(fv.at("passive_voice_count") == 3);
  CHECK(fv.at("modal_count") == 1);
  CHECK(fv.at("large_sentence_rate") == 0.2);
  CHECK(fv.at("short_sentence_rate") == 0.2);
  CHECK(fv.at("sentence_start_pronoun_count") == 1);
  CHECK(fv.at("sentence_start_article_count") == 1);
  CHECK(fv.at("sentence_start_determiner_count") == 1);
}

TEST_CASE("style features of an empty document are zero") {
  const FeatureVector fv = StyleScalarFeatures(TaggedDocument{});
  CHECK(fv.size() == 91);
  for (const Feature& f : fv) CHECK(f.value == 0.0);
}

TEST_CASE("style feature names follow the registry") {
  std::vector<std::string> registry;
  for (const FeatureSpec& s : ScalarFeatureRegistry()) {
    if (s.group == FeatureGroup::kStyle) registry.push_back(s.name);
  }
  CHECK(StyleScalarFeatures(GoldFixture()).names() == registry);
}

TEST_CASE("trigram keys round-trip") {
  CHECK(CharTrigramText(CharTrigramKey("aé€")) == "aé€");
  CHECK(PosTrigramText(PosTrigramKey("DT NN VBZ")) == "DT NN VBZ");
  CHECK_THROWS_AS(CharTrigramKey("ab"), std::invalid_argument);
  CHECK_THROWS_AS(PosTrigramKey("DT NN"), std::invalid_argument);
  CHECK_THROWS_AS(PosTrigramKey("DT NN XYZ"), std::invalid_argument);
}

TEST_CASE("a trigram exclusive to one class ranks first") {
  std::vector<TrigramProfile> docs;
  std::vector<QualityClass> labels;
  for (int i = 0; i < 4; ++i) {
    docs.push_back(ExtractTrigramProfile(DocFromText({"the qxz river " + std::to_string(i)})));
    labels.push_back(QualityClass::FA);
    docs.push_back(ExtractTrigramProfile(DocFromText({"the old river " + std::to_string(i)})));
    labels.push_back(QualityClass::Stub);
  }
  const TrigramSelector sel = FitTrigramSelector(docs, labels, 500, 5);
  REQUIRE(!sel.char_trigrams().empty());
  // "qxz" ties with the other trigrams exclusive to FA documents; ties sort by text.
  const double top = sel.char_trigrams().front().chi2;
  CHECK(top == doctest::Approx(8.0));
  bool found = false;
  for (const ScoredTrigram& t : sel.char_trigrams()) {
    if (t.chi2 != top) break;
    found |= t.text == "qxz";
  }
  CHECK(found);
  // Shared by every document: independent of the class, score 0, ranked last.
  CHECK(sel.char_trigrams().back().chi2 == 0.0);
  CHECK(!sel.warnings().empty());  // fewer than 500 distinct trigrams
}

TEST_CASE("chi-square scores equal a brute-force contingency computation") {
  Rng rng(5);
  std::vector<std::string> texts;
  std::vector<int> labels;
  const char* alphabet = "abcde ";
  for (int i = 0; i < 20; ++i) {
    std::string s;
    const int len = 8 + static_cast<int>(rng.Below(10));
    for (int k = 0; k < len; ++k) s += alphabet[rng.Below(i % 3 == 0 ? 3 : 6)];
    texts.push_back(s);
    labels.push_back(i % 3);
  }
  std::vector<TrigramProfile> docs;
  std::vector<QualityClass> classes;
  for (size_t i = 0; i < texts.size(); ++i) {
    TaggedDocument d;
    d.paragraphs = {texts[i]};
    docs.push_back(ExtractTrigramProfile(d));
    classes.push_back(FromOrdinal(labels[i]));
  }
  const auto brute = oracle::BruteCharChiSquare(texts, labels);
  const TrigramSelector sel = FitTrigramSelector(docs, classes, static_cast<int>(brute.size()), 1);
  REQUIRE(sel.char_trigrams().size() == brute.size());
  for (size_t i = 0; i < brute.size(); ++i) {
    INFO(i);
    CHECK(sel.char_trigrams()[i].text == brute[i].text);
    CHECK(sel.char_trigrams()[i].chi2 == doctest::Approx(brute[i].chi2).epsilon(1e-12));
  }
}

TEST_CASE("selector input validation") {
  std::vector<TrigramProfile> docs(2);
  CHECK_THROWS_AS(FitTrigramSelector(docs, {QualityClass::FA, QualityClass::FA}, 5, 5), DataError);
  CHECK_THROWS_AS(FitTrigramSelector(docs, {QualityClass::FA}, 5, 5), DataError);
  CHECK_THROWS_AS(FitTrigramSelector(docs, {QualityClass::FA, QualityClass::B}, 0, 5), UsageError);
}

TEST_CASE("trigram features") {
  std::vector<TrigramProfile> docs = {
      ExtractTrigramProfile(DocFromText({"The river flows east. The river is wide."})),
      ExtractTrigramProfile(DocFromText({"A stub."})),
  };
  const TrigramSelector sel = FitTrigramSelector(docs, {QualityClass::FA, QualityClass::Stub}, 50, 50);
  CHECK(sel.char_trigrams().size() < 50);

  SUBCASE("no selected trigram present gives zeros") {
    const FeatureVector fv = TrigramFeatures(DocFromText({"Zzz."}), sel);
    CHECK(fv.size() == 100);
    for (const Feature& f : fv) CHECK(f.value == 0.0);
  }
  SUBCASE("a training document reproduces its fit-time counts") {
    const FeatureVector fv = TrigramFeatures(docs[0], sel);
    for (size_t i = 0; i < sel.char_trigrams().size(); ++i) {
      const uint64_t key = sel.char_trigrams()[i].key;
      int32_t count = 0;
      for (auto [k, c] : docs[0].char_counts) count += k == key ? c : 0;
      CHECK(fv[i].value == static_cast<double>(count) / static_cast<double>(docs[0].char_total));
    }
  }
  SUBCASE("values match a sliding-window count over the folded text") {
    const TaggedDocument d = DocFromText({"The river flows east. The river is wide."});
    const std::string text = Lower(d.paragraphs.at(0));
    const FeatureVector fv = TrigramFeatures(d, sel);
    const double windows = static_cast<double>(text.size() - 2);
    for (size_t i = 0; i < sel.char_trigrams().size(); ++i) {
      const std::string& t = sel.char_trigrams()[i].text;
      double hits = 0;
      for (size_t k = 0; k + 3 <= text.size(); ++k) hits += text.compare(k, 3, t) == 0;
      CHECK(fv[i].value == doctest::Approx(hits / windows));
    }
    // POS windows stay inside sentences.
    double pos_windows = 0;
    for (const TaggedSentence& s : d.sentences) {
      pos_windows += s.tokens.size() >= 3 ? static_cast<double>(s.tokens.size() - 2) : 0;
    }
    CHECK(ExtractTrigramProfile(d).pos_total == static_cast<int64_t>(pos_windows));
  }
}

TEST_CASE("selector and profile JSON round-trip") {
  std::vector<TrigramProfile> docs = {
      ExtractTrigramProfile(DocFromText({"Ünïcode text here."})),
      ExtractTrigramProfile(DocFromText({"Plain text there."})),
  };
  const TrigramSelector sel = FitTrigramSelector(docs, {QualityClass::A, QualityClass::C}, 10, 3);
  const TrigramSelector back = TrigramSelector::FromJson(sel.ToJson());
  CHECK(back.ToJson() == sel.ToJson());
  const TrigramProfile p = TrigramProfile::FromJson(docs[0].ToJson());
  CHECK(p.char_counts == docs[0].char_counts);
  CHECK(p.pos_total == docs[0].pos_total);
  CHECK_THROWS_AS(TrigramSelector::FromJson(nlohmann::json{{"format", "other"}}), DataError);
}
