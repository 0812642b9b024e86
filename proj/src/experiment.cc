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

#include "wikiqual/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "wikiqual/errors.h"
#include "wikiqual/random.h"
#include "wikiqual/registry.h"

namespace wikiqual {

std::vector<int> StratifiedFolds(const FeatureMatrix& x, int folds, uint64_t seed) {
  if (folds < 2) throw UsageError("cross-validation needs at least 2 folds");
  std::array<std::vector<std::pair<uint64_t, size_t>>, kNumClasses> by_class;
  const std::string salt = std::to_string(seed) + ":";
  for (size_t r = 0; r < x.rows(); ++r) {
    if (!x.labels()[r]) throw DataError("row '" + x.ids()[r] + "' has no label");
    by_class[ToOrdinal(*x.labels()[r])].emplace_back(Fnv1a64(salt + x.ids()[r]), r);
  }
  if (x.rows() < 2) throw DataError("cross-validation needs at least 2 rows");
  // Dealing continues across classes, so a class smaller than the fold
  // count still spreads over distinct folds.
  std::vector<int> fold(x.rows(), -1);
  size_t next = 0;
  for (auto& rows : by_class) {
    std::sort(rows.begin(), rows.end(), [&x](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return x.ids()[a.second] < x.ids()[b.second];
    });
    for (const auto& [hash, r] : rows) fold[r] = static_cast<int>(next++ % folds);
  }
  return fold;
}

TrigramSelector RefitTrigramColumns(FeatureMatrix* x, const std::vector<size_t>& train_rows,
                                    const std::map<std::string, TrigramProfile>& profiles) {
  int m = 0, n = 0;
  std::vector<size_t> char_cols, pos_cols;
  for (size_t c = 0; c < x->cols(); ++c) {
    const std::string& name = x->columns()[c];
    if (!IsTrigramColumn(name)) continue;
    if (name.rfind("char_", 0) == 0) {
      char_cols.push_back(c);
      ++m;
    } else {
      pos_cols.push_back(c);
      ++n;
    }
  }
  auto profile = [&profiles](const std::string& id) -> const TrigramProfile& {
    auto it = profiles.find(id);
    if (it == profiles.end()) throw DataError("no trigram profile for article '" + id + "'");
    return it->second;
  };
  std::vector<const TrigramProfile*> docs;
  std::vector<QualityClass> labels;
  for (size_t r : train_rows) {
    docs.push_back(&profile(x->ids()[r]));
    labels.push_back(*x->labels()[r]);
  }
  TrigramSelector sel = FitTrigramSelector(std::span<const TrigramProfile* const>(docs),
                                           std::span<const QualityClass>(labels),
                                           std::max(m, 1), std::max(n, 1));
  for (size_t r = 0; r < x->rows(); ++r) {
    const FeatureVector fv = TrigramFeatures(profile(x->ids()[r]), sel);
    double* row = x->mutable_row(r);
    for (int i = 0; i < m; ++i) row[char_cols[i]] = fv.at(CharTrigramColumn(i));
    for (int i = 0; i < n; ++i) row[pos_cols[i]] = fv.at(PosTrigramColumn(i));
  }
  return sel;
}

namespace {

void MeanStd(const std::vector<double>& v, double* mean, double* sd) {
  double s = 0.0;
  for (double x : v) s += x;
  *mean = s / static_cast<double>(v.size());
  double q = 0.0;
  for (double x : v) q += (x - *mean) * (x - *mean);
  *sd = std::sqrt(q / static_cast<double>(v.size()));
}

std::vector<size_t> SortedById(const FeatureMatrix& x, std::vector<size_t> rows) {
  std::sort(rows.begin(), rows.end(),
            [&x](size_t a, size_t b) { return x.ids()[a] < x.ids()[b]; });
  return rows;
}

}  // namespace

CvResult CrossValidate(const FeatureMatrix& x, Algorithm a, const nlohmann::json& params,
                       const CvOptions& options) {
  const std::vector<int> fold = StratifiedFolds(x, options.folds, options.seed);
  bool has_trigrams = false;
  for (const std::string& c : x.columns()) has_trigrams = has_trigrams || IsTrigramColumn(c);

  CvResult result;
  for (int k = 0; k < options.folds; ++k) {
    std::vector<size_t> train, test;
    for (size_t r = 0; r < x.rows(); ++r) (fold[r] == k ? test : train).push_back(r);
    if (test.empty()) continue;  // more folds than rows in every class
    train = SortedById(x, std::move(train));
    test = SortedById(x, std::move(test));

    FeatureMatrix fold_x = x;
    std::vector<std::string> selector_ids;
    if (options.profiles && has_trigrams) {
      RefitTrigramColumns(&fold_x, train, *options.profiles);
      for (size_t r : train) selector_ids.push_back(x.ids()[r]);
    }
    const FeatureMatrix train_x = fold_x.SelectRows(train);
    const FeatureMatrix test_x = fold_x.SelectRows(test);
    const TrainedModel model =
        Train(train_x, a, params, DeriveSeed(options.seed, k), options.exec);

    if (options.audit_leakage) {
      std::set<std::string> test_ids(test_x.ids().begin(), test_x.ids().end());
      auto leaks = [&test_ids](const std::vector<std::string>& ids) {
        return std::any_of(ids.begin(), ids.end(),
                           [&test_ids](const std::string& id) { return test_ids.count(id) > 0; });
      };
      if (model.standardizer && (leaks(model.standardizer->fitted_ids()) ||
                                 model.standardizer->fitted_ids().size() != train.size())) {
        throw std::logic_error("leakage: standardizer of fold " + std::to_string(k) +
                               " saw test rows");
      }
      if (leaks(selector_ids)) {
        throw std::logic_error("leakage: trigram selector of fold " + std::to_string(k) +
                               " saw test rows");
      }
      ++result.audited_folds;
    }

    std::vector<QualityClass> truth;
    for (const auto& l : test_x.labels()) truth.push_back(*l);
    const Metrics m = Evaluate(truth, Predict(model, test_x));
    result.fold_accuracy.push_back(m.accuracy);
    result.fold_mse.push_back(m.mse);
  }
  MeanStd(result.fold_accuracy, &result.mean_accuracy, &result.std_accuracy);
  MeanStd(result.fold_mse, &result.mean_mse, &result.std_mse);
  return result;
}

ExperimentTable RunExperiment(const FeatureMatrix& x,
                              const std::vector<std::set<ExperimentGroup>>& groupings,
                              const std::vector<std::string>& column_names,
                              const std::vector<Algorithm>& algorithms,
                              const std::map<Algorithm, nlohmann::json>& params,
                              const CvOptions& options) {
  if (groupings.empty()) throw UsageError("experiment: no feature groups requested");
  if (groupings.size() != column_names.size()) {
    throw std::invalid_argument("experiment: one column name per grouping required");
  }
  if (!x.all_labeled()) throw DataError("experiment: every row of the feature matrix needs a label");
  ExperimentTable table;
  table.column_names = column_names;
  table.algorithms = algorithms;
  table.cells.assign(algorithms.size(), std::vector<ExperimentCell>(groupings.size()));
  for (size_t g = 0; g < groupings.size(); ++g) {
    if (groupings[g].empty()) throw UsageError("experiment: empty feature grouping");
    const std::vector<size_t> cols = x.ColumnsOf(groupings[g]);
    if (cols.empty()) throw DataError("experiment: matrix has no columns for '" + column_names[g] + "'");
    const FeatureMatrix sub = x.SelectColumns(cols);
    for (size_t i = 0; i < algorithms.size(); ++i) {
      auto p = params.find(algorithms[i]);
      const CvResult cv = CrossValidate(sub, algorithms[i],
                                        p == params.end() ? nlohmann::json() : p->second, options);
      table.cells[i][g] = {cv.mean_accuracy, cv.std_accuracy, cv.mean_mse, cv.std_mse};
    }
  }
  return table;
}

namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

void WriteTableCsv(const ExperimentTable& t, Metric metric, std::ostream& out) {
  out << "classifier";
  for (const std::string& c : t.column_names) out << ',' << c << ',' << c << "_std";
  out << '\n';
  for (size_t i = 0; i < t.algorithms.size(); ++i) {
    out << ToString(t.algorithms[i]);
    for (const ExperimentCell& cell : t.cells[i]) {
      const double v = metric == Metric::kAccuracy ? cell.accuracy : cell.mse;
      const double s = metric == Metric::kAccuracy ? cell.accuracy_std : cell.mse_std;
      out << ',' << Fixed(v, 6) << ',' << Fixed(s, 6);
    }
    out << '\n';
  }
}

void WriteTableText(const ExperimentTable& t, Metric metric, const std::string& title,
                    std::ostream& out) {
  const int width = 16;
  auto pad = [](const std::string& s, int w) {
    return s.size() >= static_cast<size_t>(w) ? s : std::string(w - s.size(), ' ') + s;
  };
  out << title << '\n';
  std::string header = "Classifier";
  header.resize(10, ' ');
  for (const std::string& c : t.column_names) header += pad(c, width);
  out << header << '\n' << std::string(header.size(), '-') << '\n';
  for (size_t i = 0; i < t.algorithms.size(); ++i) {
    std::string line(ToString(t.algorithms[i]));
    line.resize(10, ' ');
    for (const ExperimentCell& cell : t.cells[i]) {
      const double v = metric == Metric::kAccuracy ? cell.accuracy : cell.mse;
      const double s = metric == Metric::kAccuracy ? cell.accuracy_std : cell.mse_std;
      line += pad(Fixed(v, 3) + " +/- " + Fixed(s, 3), width);
    }
    out << line << '\n';
  }
}

}  // namespace wikiqual
