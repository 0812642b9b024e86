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

#include "wikiqual/feature_vector.h"

#include <cmath>
#include <stdexcept>

#include "wikiqual/errors.h"
#include "wikiqual/text_util.h"

namespace wikiqual {

std::string_view ToString(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::kLength: return "Length";
    case FeatureGroup::kStructure: return "Structure";
    case FeatureGroup::kStyle: return "Style";
    case FeatureGroup::kReadability: return "Readability";
    case FeatureGroup::kReview: return "Review";
    case FeatureGroup::kNetwork: return "Network";
  }
  return "?";
}

std::string_view ToString(ExperimentGroup g) {
  switch (g) {
    case ExperimentGroup::kText: return "Text";
    case ExperimentGroup::kReview: return "Review";
    case ExperimentGroup::kNetwork: return "Network";
  }
  return "?";
}

ExperimentGroup ParseExperimentGroup(std::string_view name) {
  name = Trim(name);
  if (EqualsIgnoreCase(name, "text") || EqualsIgnoreCase(name, "tf")) return ExperimentGroup::kText;
  if (EqualsIgnoreCase(name, "review") || EqualsIgnoreCase(name, "rf")) {
    return ExperimentGroup::kReview;
  }
  if (EqualsIgnoreCase(name, "network") || EqualsIgnoreCase(name, "nf")) {
    return ExperimentGroup::kNetwork;
  }
  throw UsageError("unknown feature group '" + std::string(name) +
                   "' (expected Text, Review or Network)");
}

ExperimentGroup ExperimentGroupOf(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::kReview: return ExperimentGroup::kReview;
    case FeatureGroup::kNetwork: return ExperimentGroup::kNetwork;
    default: return ExperimentGroup::kText;
  }
}

void FeatureVector::Add(std::string name, FeatureGroup group, double value) {
  if (!std::isfinite(value)) {
    throw std::logic_error("non-finite value for feature " + name);
  }
  features_.push_back(Feature{std::move(name), group, value});
}

void FeatureVector::Append(const FeatureVector& other) {
  features_.insert(features_.end(), other.features_.begin(), other.features_.end());
}

double FeatureVector::at(std::string_view name) const {
  for (const Feature& f : features_) {
    if (f.name == name) return f.value;
  }
  throw std::out_of_range("no feature named " + std::string(name));
}

bool FeatureVector::contains(std::string_view name) const {
  for (const Feature& f : features_) {
    if (f.name == name) return true;
  }
  return false;
}

std::vector<std::string> FeatureVector::names() const {
  std::vector<std::string> out;
  out.reserve(features_.size());
  for (const Feature& f : features_) out.push_back(f.name);
  return out;
}

std::vector<double> FeatureVector::values() const {
  std::vector<double> out;
  out.reserve(features_.size());
  for (const Feature& f : features_) out.push_back(f.value);
  return out;
}

}  // namespace wikiqual
