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

#ifndef WIKIQUAL_FEATURE_VECTOR_H_
#define WIKIQUAL_FEATURE_VECTOR_H_

#include <string>
#include <string_view>
#include <vector>

namespace wikiqual {

enum class FeatureGroup { kLength, kStructure, kStyle, kReadability, kReview, kNetwork };

std::string_view ToString(FeatureGroup g);

// The three groups used by the ablation experiment.
enum class ExperimentGroup { kText, kReview, kNetwork };

std::string_view ToString(ExperimentGroup g);
// "Text"/"TF", "Review"/"RF", "Network"/"NF", case-insensitive. Throws
// UsageError for anything else.
ExperimentGroup ParseExperimentGroup(std::string_view name);
ExperimentGroup ExperimentGroupOf(FeatureGroup g);

struct Feature {
  std::string name;
  FeatureGroup group;
  double value;
};

// Ordered named features of one article.
class FeatureVector {
 public:
  // Throws std::logic_error on a non-finite value: extractors must apply
  // the zero-denominator sentinel themselves.
  void Add(std::string name, FeatureGroup group, double value);
  void Append(const FeatureVector& other);

  // Throws std::out_of_range for an unknown name.
  double at(std::string_view name) const;
  bool contains(std::string_view name) const;

  size_t size() const { return features_.size(); }
  bool empty() const { return features_.empty(); }
  const Feature& operator[](size_t i) const { return features_[i]; }
  auto begin() const { return features_.begin(); }
  auto end() const { return features_.end(); }

  std::vector<std::string> names() const;
  std::vector<double> values() const;

 private:
  std::vector<Feature> features_;
};

// num / den, or 0.0 when den == 0.
inline double SafeRatio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace wikiqual

#endif  // WIKIQUAL_FEATURE_VECTOR_H_
