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

#include "wikiqual/registry.h"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

namespace wikiqual {

namespace {

// Bases of the 18 part-of-speech counts, in listing order.
constexpr const char* kPosCountBases[] = {
    "modal",
    "passive_voice",
    "to_be",
    "different_word",
    "noun",
    "different_noun",
    "verb",
    "different_verb",
    "pronoun",
    "different_pronoun",
    "adjective",
    "different_adjective",
    "adverb",
    "different_adverb",
    "coordinating_conjunction",
    "different_coordinating_conjunction",
    "subordinating_conjunction",
    "different_subordinating_conjunction",
};

constexpr const char* kSentenceStartCategories[] = {
    "pronoun",   "article",   "coordinating_conjunction", "subordinating_conjunction",
    "determiner", "adjective", "noun",                     "adverb",
};

std::vector<FeatureSpec> BuildScalarRegistry() {
  std::vector<FeatureSpec> r;
  auto add = [&r](std::string name, FeatureGroup g, const char* producer) {
    r.push_back(FeatureSpec{std::move(name), g, producer});
  };

  for (const char* n : {"character_count", "word_count", "sentence_count", "syllable_count"}) {
    add(n, FeatureGroup::kLength, "length_features");
  }

  for (const char* n :
       {"section_count", "subsection_count", "paragraph_count", "mean_section_size",
        "mean_paragraph_size", "longest_section_size", "shortest_section_size",
        "longest_shortest_section_ratio", "section_size_stddev", "mean_subsections_per_section",
        "abstract_size", "abstract_size_article_length_ratio", "citation_count",
        "citations_per_section", "citations_per_text_length", "external_link_count",
        "external_links_per_section", "external_links_per_text_length", "image_count",
        "images_per_section", "images_per_text_length"}) {
    add(n, FeatureGroup::kStructure, "structure_features");
  }

  constexpr const char* kStyle = "style_scalar_features";
  for (const char* n :
       {"mean_sentence_size", "largest_sentence_size", "shortest_sentence_size",
        "large_sentence_rate", "short_sentence_rate", "question_count", "question_ratio",
        "exclamation_count", "exclamation_ratio"}) {
    add(n, FeatureGroup::kStyle, kStyle);
  }
  for (const char* c : kSentenceStartCategories) {
    add(std::string("sentence_start_") + c + "_count", FeatureGroup::kStyle, kStyle);
  }
  for (const char* c : kSentenceStartCategories) {
    add(std::string("sentence_start_") + c + "_ratio", FeatureGroup::kStyle, kStyle);
  }
  for (const char* b : kPosCountBases) add(std::string(b) + "_count", FeatureGroup::kStyle, kStyle);
  for (const char* b : kPosCountBases) {
    add(std::string(b) + "_per_sentence", FeatureGroup::kStyle, kStyle);
  }
  for (const char* b : kPosCountBases) add(std::string(b) + "_per_word", FeatureGroup::kStyle, kStyle);
  for (const char* b : {"modal", "passive_voice", "to_be"}) {
    add(std::string(b) + "_per_verb", FeatureGroup::kStyle, kStyle);
  }
  for (const char* b : {"different_noun", "different_verb", "different_pronoun",
                        "different_adjective", "different_adverb",
                        "different_coordinating_conjunction",
                        "different_subordinating_conjunction"}) {
    add(std::string(b) + "_per_different_word", FeatureGroup::kStyle, kStyle);
  }
  add("syllables_per_word", FeatureGroup::kStyle, kStyle);
  add("characters_per_word", FeatureGroup::kStyle, kStyle);

  for (const char* n : {"automated_readability_index", "coleman_liau_index",
                        "flesch_reading_ease", "flesch_kincaid_grade", "gunning_fog_index",
                        "lix", "smog_grade", "dale_chall_score"}) {
    add(n, FeatureGroup::kReadability, "readability_features");
  }

  for (const char* n :
       {"age_days", "age_per_review", "reviews_per_day", "reviews_per_user",
        "reviews_per_user_stddev", "discussion_count", "review_count", "user_count",
        "registered_user_count", "anonymous_user_count", "occasional_user_count",
        "registered_user_rate", "anonymous_user_rate", "occasional_user_rate",
        "registered_anonymous_user_ratio", "registered_review_count", "anonymous_review_count",
        "occasional_review_count", "registered_review_rate", "anonymous_review_rate",
        "occasional_review_rate", "registered_anonymous_review_ratio", "revert_count",
        "revert_review_ratio", "diversity", "modified_lines_rate", "last_3mo_review_count",
        "last_3mo_review_rate", "most_active_review_count", "most_active_review_rate"}) {
    add(n, FeatureGroup::kReview, "review_features");
  }
  add("prob_review", FeatureGroup::kReview, "prob_review");

  for (const char* n : {"pagerank", "in_degree", "out_degree", "assortativity_in_in",
                        "assortativity_in_out", "assortativity_out_in", "assortativity_out_out",
                        "local_clustering", "reciprocity", "link_count", "translation_count"}) {
    add(n, FeatureGroup::kNetwork, "network_features");
  }
  return r;
}

}  // namespace

const std::vector<FeatureSpec>& ScalarFeatureRegistry() {
  static const std::vector<FeatureSpec> registry = BuildScalarRegistry();
  return registry;
}

std::string CharTrigramColumn(int rank) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "char_trigram_%03d", rank + 1);
  return buf;
}

std::string PosTrigramColumn(int rank) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "pos_trigram_%03d", rank + 1);
  return buf;
}

std::vector<FeatureSpec> FeatureRegistry(int m, int n) {
  std::vector<FeatureSpec> out;
  for (const FeatureSpec& spec : ScalarFeatureRegistry()) {
    if (spec.group == FeatureGroup::kReadability && out.back().group == FeatureGroup::kStyle) {
      for (int i = 0; i < m; ++i) {
        out.push_back({CharTrigramColumn(i), FeatureGroup::kStyle, "trigram_features"});
      }
      for (int i = 0; i < n; ++i) {
        out.push_back({PosTrigramColumn(i), FeatureGroup::kStyle, "trigram_features"});
      }
    }
    out.push_back(spec);
  }
  return out;
}

bool IsTrigramColumn(std::string_view name) {
  for (std::string_view prefix : {"char_trigram_", "pos_trigram_"}) {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) continue;
    const std::string_view digits = name.substr(prefix.size());
    return std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
  }
  return false;
}

std::optional<FeatureGroup> GroupOfColumn(std::string_view name) {
  static const std::unordered_map<std::string, FeatureGroup> groups = [] {
    std::unordered_map<std::string, FeatureGroup> m;
    for (const FeatureSpec& spec : ScalarFeatureRegistry()) m.emplace(spec.name, spec.group);
    return m;
  }();
  if (IsTrigramColumn(name)) return FeatureGroup::kStyle;
  auto it = groups.find(std::string(name));
  if (it == groups.end()) return std::nullopt;
  return it->second;
}

int CountScalarFeatures(FeatureGroup g) {
  int n = 0;
  for (const FeatureSpec& spec : ScalarFeatureRegistry()) n += spec.group == g ? 1 : 0;
  return n;
}

}  // namespace wikiqual
