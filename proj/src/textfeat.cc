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

#include "wikiqual/textfeat.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wikiqual {

FeatureVector LengthFeatures(const DocumentStructure& doc) {
  FeatureVector fv;
  constexpr FeatureGroup g = FeatureGroup::kLength;
  fv.Add("character_count", g, static_cast<double>(doc.character_count));
  fv.Add("word_count", g, static_cast<double>(doc.tokens.size()));
  fv.Add("sentence_count", g, static_cast<double>(doc.sentences.size()));
  fv.Add("syllable_count", g, static_cast<double>(doc.SyllableTotal()));
  return fv;
}

FeatureVector StructureFeatures(const DocumentStructure& doc) {
  const int n = static_cast<int>(doc.sections.size());
  std::vector<int> top(n, -1);
  std::vector<double> sizes;
  std::vector<int> slot(n, -1);
  int subsections = 0;
  for (int i = 0; i < n; ++i) {
    const Section& s = doc.sections[i];
    if (s.depth == 1) {
      slot[i] = static_cast<int>(sizes.size());
      sizes.push_back(0.0);
      top[i] = i;
    } else {
      ++subsections;
      top[i] = s.parent >= 0 ? top[s.parent] : -1;
    }
    if (top[i] >= 0) sizes[slot[top[i]]] += static_cast<double>(s.char_size);
  }

  const double sections = static_cast<double>(sizes.size());
  double mean = 0.0, longest = 0.0, shortest = 0.0, stddev = 0.0;
  if (!sizes.empty()) {
    double sum = 0.0;
    for (double v : sizes) sum += v;
    mean = sum / sections;
    longest = *std::max_element(sizes.begin(), sizes.end());
    shortest = *std::min_element(sizes.begin(), sizes.end());
    double sq = 0.0;
    for (double v : sizes) sq += (v - mean) * (v - mean);
    stddev = std::sqrt(sq / sections);
  }

  const double chars = static_cast<double>(doc.character_count);
  const double paragraphs = static_cast<double>(doc.paragraphs.size());
  const double sentences = static_cast<double>(doc.sentences.size());
  const double citations = static_cast<double>(doc.citation_count);
  const double links = static_cast<double>(doc.external_link_count);
  const double images = static_cast<double>(doc.image_count);

  FeatureVector fv;
  constexpr FeatureGroup g = FeatureGroup::kStructure;
  fv.Add("section_count", g, sections);
  fv.Add("subsection_count", g, subsections);
  fv.Add("paragraph_count", g, paragraphs);
  fv.Add("mean_section_size", g, mean);
  fv.Add("mean_paragraph_size", g, SafeRatio(chars, paragraphs));
  fv.Add("longest_section_size", g, longest);
  fv.Add("shortest_section_size", g, shortest);
  fv.Add("longest_shortest_section_ratio", g, SafeRatio(longest, shortest));
  fv.Add("section_size_stddev", g, stddev);
  fv.Add("mean_subsections_per_section", g, SafeRatio(subsections, sections));
  fv.Add("abstract_size", g, static_cast<double>(doc.abstract_size));
  fv.Add("abstract_size_article_length_ratio", g,
         SafeRatio(static_cast<double>(doc.abstract_size), chars));
  fv.Add("citation_count", g, citations);
  fv.Add("citations_per_section", g, SafeRatio(citations, sections));
  fv.Add("citations_per_text_length", g, SafeRatio(citations, chars));
  fv.Add("external_link_count", g, links);
  fv.Add("external_links_per_section", g, SafeRatio(links, sections));
  fv.Add("external_links_per_text_length", g, SafeRatio(links, chars));
  fv.Add("image_count", g, images);
  fv.Add("images_per_section", g, SafeRatio(images, sections));
  fv.Add("images_per_text_length", g, SafeRatio(images, sentences));
  return fv;
}

}  // namespace wikiqual
