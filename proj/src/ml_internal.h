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

#ifndef WIKIQUAL_SRC_ML_INTERNAL_H_
#define WIKIQUAL_SRC_ML_INTERNAL_H_

#include <memory>

#include "wikiqual/ml.h"

namespace wikiqual::internal {

std::unique_ptr<Classifier> MakeDecisionTree(const nlohmann::json& params);
std::unique_ptr<Classifier> MakeRandomForest(const nlohmann::json& params, Execution exec);
std::unique_ptr<Classifier> MakeGradientBoosting(const nlohmann::json& params);
std::unique_ptr<Classifier> MakeKnn(const nlohmann::json& params);
std::unique_ptr<Classifier> MakeLogisticRegression(const nlohmann::json& params);
std::unique_ptr<Classifier> MakeNaiveBayes(const nlohmann::json& params);
std::unique_ptr<Classifier> MakeLinearSvc(const nlohmann::json& params);
std::unique_ptr<Classifier> MakeNeuralNetwork(const nlohmann::json& params);

// Index of the largest value; ties go to the lowest index.
template <typename Container>
int ArgMax(const Container& v) {
  int best = 0;
  for (int k = 1; k < static_cast<int>(v.size()); ++k) {
    if (v[k] > v[best]) best = k;
  }
  return best;
}

}  // namespace wikiqual::internal

#endif  // WIKIQUAL_SRC_ML_INTERNAL_H_
