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

#ifndef WIKIQUAL_ML_H_
#define WIKIQUAL_ML_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wikiqual/execution.h"
#include "wikiqual/feature_matrix.h"
#include "wikiqual/quality_class.h"

namespace wikiqual {

enum class Algorithm { kDT, kKNN, kLR, kNB, kRF, kSVC, kNN, kGB };

// Table order.
inline constexpr std::array<Algorithm, 8> kAllAlgorithms = {
    Algorithm::kDT, Algorithm::kKNN, Algorithm::kLR,  Algorithm::kNB,
    Algorithm::kRF, Algorithm::kSVC, Algorithm::kNN, Algorithm::kGB};

std::string_view ToString(Algorithm a);
// Case-insensitive "DT", "KNN", ...; throws UsageError.
Algorithm ParseAlgorithm(std::string_view name);
bool NeedsStandardization(Algorithm a);

// Defaults for every hyperparameter of `a`.
nlohmann::json DefaultParams(Algorithm a);
// Defaults overlaid with `overrides`; unknown keys raise UsageError.
nlohmann::json ResolveParams(Algorithm a, const nlohmann::json& overrides);

inline constexpr int kNumClasses = 7;

// Dense training data; labels are class ordinals.
struct Dataset {
  size_t n = 0;
  size_t d = 0;
  std::vector<double> x;  // row-major
  std::vector<int> y;
  const double* row(size_t i) const { return x.data() + i * d; }
};

class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual void Fit(const Dataset& data, uint64_t seed) = 0;
  virtual int Predict(const double* x) const = 0;
  virtual nlohmann::json State() const = 0;
  virtual void LoadState(const nlohmann::json& state) = 0;
};

// `params` must be fully resolved.
std::unique_ptr<Classifier> MakeClassifier(Algorithm a, const nlohmann::json& params,
                                           Execution exec = Execution::kParallel);

struct TrainedModel {
  Algorithm algorithm = Algorithm::kDT;
  nlohmann::json params;
  uint64_t seed = 0;
  std::vector<std::string> columns;
  std::string column_checksum;
  std::optional<Standardizer> standardizer;
  std::unique_ptr<Classifier> classifier;
};

// Throws DataError for unlabelled rows, fewer than two classes, or
// non-finite values (naming the column).
TrainedModel Train(const FeatureMatrix& x, Algorithm a, const nlohmann::json& overrides,
                   uint64_t seed, Execution exec = Execution::kParallel);
// Throws DataError when the matrix columns differ from the training columns.
std::vector<QualityClass> Predict(const TrainedModel& model, const FeatureMatrix& x);

nlohmann::json ModelToJson(const TrainedModel& model);
TrainedModel ModelFromJson(const nlohmann::json& j);
void SaveModel(const TrainedModel& model, const std::string& path);
TrainedModel LoadModel(const std::string& path);

struct Metrics {
  double accuracy = 0.0;
  double mse = 0.0;  // over ordinals Stub = 0 ... FA = 6
};

// Throws DataError on empty input or length mismatch.
Metrics Evaluate(const std::vector<QualityClass>& truth, const std::vector<QualityClass>& pred);

}  // namespace wikiqual

#endif  // WIKIQUAL_ML_H_
