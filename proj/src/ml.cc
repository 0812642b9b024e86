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

#include "wikiqual/ml.h"

#include <cmath>
#include <fstream>
#include <set>

#include "ml_internal.h"
#include "wikiqual/errors.h"
#include "wikiqual/text_util.h"

namespace wikiqual {

using json = nlohmann::json;

std::string_view ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kDT: return "DT";
    case Algorithm::kKNN: return "KNN";
    case Algorithm::kLR: return "LR";
    case Algorithm::kNB: return "NB";
    case Algorithm::kRF: return "RF";
    case Algorithm::kSVC: return "SVC";
    case Algorithm::kNN: return "NN";
    case Algorithm::kGB: return "GB";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (EqualsIgnoreCase(name, ToString(a))) return a;
  }
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (expected DT, KNN, LR, NB, RF, SVC, NN or GB)");
}

bool NeedsStandardization(Algorithm a) {
  return a == Algorithm::kKNN || a == Algorithm::kLR || a == Algorithm::kSVC ||
         a == Algorithm::kNN;
}

json DefaultParams(Algorithm a) {
  switch (a) {
    case Algorithm::kDT:
      return {{"max_depth", 0}, {"min_samples_split", 2}, {"min_samples_leaf", 1}};
    case Algorithm::kKNN:
      return {{"k", 5}};
    case Algorithm::kLR:
      return {{"learning_rate", 0.1}, {"max_iter", 500}, {"l2", 1e-4}};
    case Algorithm::kNB:
      return {{"var_smoothing", 1e-9}};
    case Algorithm::kRF:
      return {{"n_trees", 200}, {"max_features", "sqrt"}, {"max_depth", 0},
              {"min_samples_split", 2}, {"min_samples_leaf", 1}};
    case Algorithm::kSVC:
      return {{"lambda", 1e-4}, {"epochs", 20}, {"eta0", 0.1}};
    case Algorithm::kNN:
      return {{"hidden", 64}, {"epochs", 200}, {"batch_size", 32}, {"learning_rate", 1e-3},
              {"l2", 1e-4}};
    case Algorithm::kGB:
      return {{"n_rounds", 300}, {"max_depth", 3}, {"learning_rate", 0.1},
              {"min_samples_leaf", 1}, {"max_bins", 64}};
  }
  return json::object();
}

json ResolveParams(Algorithm a, const json& overrides) {
  json p = DefaultParams(a);
  if (overrides.is_null()) return p;
  if (!overrides.is_object()) throw UsageError("hyperparameters must be a JSON object");
  for (const auto& [key, value] : overrides.items()) {
    if (!p.contains(key)) {
      throw UsageError("unknown hyperparameter '" + key + "' for " + std::string(ToString(a)));
    }
    if (p[key].is_number() != value.is_number() || p[key].is_string() != value.is_string()) {
      throw UsageError("hyperparameter '" + key + "' has the wrong type");
    }
    p[key] = value;
  }
  return p;
}

std::unique_ptr<Classifier> MakeClassifier(Algorithm a, const json& params, Execution exec) {
  try {
    switch (a) {
      case Algorithm::kDT: return internal::MakeDecisionTree(params);
      case Algorithm::kKNN: return internal::MakeKnn(params);
      case Algorithm::kLR: return internal::MakeLogisticRegression(params);
      case Algorithm::kNB: return internal::MakeNaiveBayes(params);
      case Algorithm::kRF: return internal::MakeRandomForest(params, exec);
      case Algorithm::kSVC: return internal::MakeLinearSvc(params);
      case Algorithm::kNN: return internal::MakeNeuralNetwork(params);
      case Algorithm::kGB: return internal::MakeGradientBoosting(params);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad hyperparameters: ") + e.what());
  }
  throw std::logic_error("unhandled algorithm");
}

namespace {

Dataset ToDataset(const FeatureMatrix& x, const Standardizer* standardizer) {
  Dataset data;
  data.n = x.rows();
  data.d = x.cols();
  data.x.resize(data.n * data.d);
  data.y.resize(data.n);
  for (size_t r = 0; r < data.n; ++r) {
    double* out = data.x.data() + r * data.d;
    if (standardizer) {
      standardizer->Transform(x.row(r), out);
    } else {
      std::copy(x.row(r), x.row(r) + data.d, out);
    }
    data.y[r] = ToOrdinal(*x.labels()[r]);
  }
  return data;
}

}  // namespace

TrainedModel Train(const FeatureMatrix& x, Algorithm a, const json& overrides, uint64_t seed,
                   Execution exec) {
  std::set<QualityClass> classes;
  for (size_t r = 0; r < x.rows(); ++r) {
    if (!x.labels()[r]) throw DataError("training row '" + x.ids()[r] + "' has no label");
    classes.insert(*x.labels()[r]);
    for (size_t c = 0; c < x.cols(); ++c) {
      if (!std::isfinite(x.at(r, c))) {
        throw DataError("non-finite value in column '" + x.columns()[c] + "' of row '" +
                        x.ids()[r] + "'");
      }
    }
  }
  if (classes.size() < 2) {
    throw DataError("training data must contain at least two classes (found " +
                    std::to_string(classes.size()) + ")");
  }
  TrainedModel m;
  m.algorithm = a;
  m.params = ResolveParams(a, overrides);
  m.seed = seed;
  m.columns = x.columns();
  m.column_checksum = ColumnChecksum(x.columns());
  if (NeedsStandardization(a)) {
    m.standardizer.emplace();
    m.standardizer->Fit(x);
  }
  m.classifier = MakeClassifier(a, m.params, exec);
  m.classifier->Fit(ToDataset(x, m.standardizer ? &*m.standardizer : nullptr), seed);
  return m;
}

std::vector<QualityClass> Predict(const TrainedModel& model, const FeatureMatrix& x) {
  if (x.rows() == 0) return {};
  const std::string checksum = ColumnChecksum(x.columns());
  if (checksum != model.column_checksum) {
    throw DataError("feature columns (checksum " + checksum +
                    ") differ from the model's training columns (checksum " +
                    model.column_checksum + "); re-extract features with the same selector");
  }
  std::vector<QualityClass> out(x.rows());
  std::vector<double> buf(x.cols());
  for (size_t r = 0; r < x.rows(); ++r) {
    const double* row = x.row(r);
    if (model.standardizer) {
      model.standardizer->Transform(row, buf.data());
      row = buf.data();
    }
    out[r] = FromOrdinal(model.classifier->Predict(row));
  }
  return out;
}

json ModelToJson(const TrainedModel& model) {
  return {{"format", "wikiqual-model"},
          {"version", 1},
          {"algorithm", ToString(model.algorithm)},
          {"params", model.params},
          {"seed", model.seed},
          {"columns", model.columns},
          {"column_checksum", model.column_checksum},
          {"standardizer", model.standardizer ? model.standardizer->ToJson() : json(nullptr)},
          {"state", model.classifier->State()}};
}

TrainedModel ModelFromJson(const json& j) {
  try {
    if (j.at("format").get<std::string>() != "wikiqual-model") {
      throw DataError("not a wikiqual model file");
    }
    if (j.at("version").get<int>() != 1) throw DataError("unsupported model version");
    TrainedModel m;
    m.algorithm = ParseAlgorithm(j.at("algorithm").get<std::string>());
    m.params = ResolveParams(m.algorithm, j.at("params"));
    m.seed = j.at("seed").get<uint64_t>();
    m.columns = j.at("columns").get<std::vector<std::string>>();
    m.column_checksum = j.at("column_checksum").get<std::string>();
    if (m.column_checksum != ColumnChecksum(m.columns)) {
      throw DataError("model file: column checksum does not match its column list");
    }
    if (!j.at("standardizer").is_null()) {
      m.standardizer = Standardizer::FromJson(j.at("standardizer"));
      if (m.standardizer->mean().size() != m.columns.size()) {
        throw DataError("model file: standardizer width differs from column count");
      }
    }
    m.classifier = MakeClassifier(m.algorithm, m.params);
    m.classifier->LoadState(j.at("state"));
    return m;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model file: ") + e.what());
  } catch (const UsageError& e) {
    throw DataError(std::string("malformed model file: ") + e.what());
  }
}

void SaveModel(const TrainedModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model " + path);
  out << ModelToJson(model).dump() << '\n';
  if (!out) throw DataError("error writing model " + path);
}

TrainedModel LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed model file " + path + ": " + e.what());
  }
  return ModelFromJson(j);
}

Metrics Evaluate(const std::vector<QualityClass>& truth, const std::vector<QualityClass>& pred) {
  if (truth.size() != pred.size()) {
    throw DataError("evaluate: " + std::to_string(truth.size()) + " labels but " +
                    std::to_string(pred.size()) + " predictions");
  }
  if (truth.empty()) throw DataError("evaluate: no predictions");
  double correct = 0.0, sq = 0.0;
  for (size_t i = 0; i < truth.size(); ++i) {
    const int d = ToOrdinal(truth[i]) - ToOrdinal(pred[i]);
    correct += d == 0 ? 1.0 : 0.0;
    sq += static_cast<double>(d * d);
  }
  const double n = static_cast<double>(truth.size());
  return {correct / n, sq / n};
}

}  // namespace wikiqual
