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

#ifndef WIKIQUAL_EXPERIMENT_H_
#define WIKIQUAL_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "wikiqual/feature_matrix.h"
#include "wikiqual/ml.h"
#include "wikiqual/stylefeat.h"

namespace wikiqual {

inline constexpr int kDefaultFolds = 10;
inline constexpr uint64_t kDefaultSeed = 42;

// Stratified fold index per row. Within each class, rows are ordered by a
// seeded hash of the article id and dealt round-robin, continuing across
// classes, so the assignment does not depend on row order. Throws DataError
// for unlabelled rows or fewer than two rows, UsageError for fewer than two
// folds.
std::vector<int> StratifiedFolds(const FeatureMatrix& x, int folds, uint64_t seed);

struct CvOptions {
  int folds = kDefaultFolds;
  uint64_t seed = kDefaultSeed;
  Execution exec = Execution::kParallel;
  // Verify per fold that no test row reached the standardizer or the
  // trigram selector; throws std::logic_error on a violation.
  bool audit_leakage = false;
  // Trigram profiles keyed by article id. When set, the selector is refit
  // on each training fold and the matrix's trigram columns recomputed.
  const std::map<std::string, TrigramProfile>* profiles = nullptr;
};

struct CvResult {
  std::vector<double> fold_accuracy;
  std::vector<double> fold_mse;
  double mean_accuracy = 0.0, std_accuracy = 0.0;
  double mean_mse = 0.0, std_mse = 0.0;
  int audited_folds = 0;
};

CvResult CrossValidate(const FeatureMatrix& x, Algorithm a, const nlohmann::json& params,
                       const CvOptions& options);

// Replaces the trigram columns of `x` with frequencies of the trigrams
// selected on `train_rows`. Returns the selector used.
TrigramSelector RefitTrigramColumns(FeatureMatrix* x, const std::vector<size_t>& train_rows,
                                    const std::map<std::string, TrigramProfile>& profiles);

struct ExperimentCell {
  double accuracy = 0.0, accuracy_std = 0.0;
  double mse = 0.0, mse_std = 0.0;
};

struct ExperimentTable {
  std::vector<std::string> column_names;  // "All" or "TF", "RF", "NF"
  std::vector<Algorithm> algorithms;
  std::vector<std::vector<ExperimentCell>> cells;  // [algorithm][column]
};

// One column per entry of `groupings`; each column restricts the matrix to
// the union of its groups.
ExperimentTable RunExperiment(const FeatureMatrix& x,
                              const std::vector<std::set<ExperimentGroup>>& groupings,
                              const std::vector<std::string>& column_names,
                              const std::vector<Algorithm>& algorithms,
                              const std::map<Algorithm, nlohmann::json>& params,
                              const CvOptions& options);

enum class Metric { kAccuracy, kMse };

void WriteTableCsv(const ExperimentTable& t, Metric metric, std::ostream& out);
void WriteTableText(const ExperimentTable& t, Metric metric, const std::string& title,
                    std::ostream& out);

}  // namespace wikiqual

#endif  // WIKIQUAL_EXPERIMENT_H_
