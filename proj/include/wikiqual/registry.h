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

#ifndef WIKIQUAL_REGISTRY_H_
#define WIKIQUAL_REGISTRY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wikiqual/feature_vector.h"

namespace wikiqual {

inline constexpr int kRegistryVersion = 1;
inline constexpr int kDefaultCharTrigrams = 50;
inline constexpr int kDefaultPosTrigrams = 50;

struct FeatureSpec {
  std::string name;
  FeatureGroup group;
  // The extractor that emits the feature, e.g. "length_features".
  std::string producer;
};

// Every feature with a fixed name, in canonical column order. Trigram
// columns are not included; see FeatureRegistry.
const std::vector<FeatureSpec>& ScalarFeatureRegistry();

// Full column list for a matrix with m character and n POS trigram slots.
// Trigram columns are positional ("char_trigram_001" is the best-ranked
// character trigram of the fitted selector) and sit after the scalar style
// features.
std::vector<FeatureSpec> FeatureRegistry(int m, int n);

std::string CharTrigramColumn(int rank);  // 0-based rank
std::string PosTrigramColumn(int rank);

// Group of a scalar or trigram column name; nullopt for unknown names.
std::optional<FeatureGroup> GroupOfColumn(std::string_view name);
bool IsTrigramColumn(std::string_view name);

// Number of scalar features per group, for documentation and tests.
int CountScalarFeatures(FeatureGroup g);

}  // namespace wikiqual

#endif  // WIKIQUAL_REGISTRY_H_
