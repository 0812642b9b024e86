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

#ifndef WIKIQUAL_FEATURE_MATRIX_H_
#define WIKIQUAL_FEATURE_MATRIX_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "wikiqual/feature_vector.h"
#include "wikiqual/quality_class.h"

namespace wikiqual {

// Rows are articles, columns canonical feature names; values row-major.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(std::vector<std::string> columns);

  // The first row fixes the columns of an empty matrix; later rows must
  // match them exactly (std::invalid_argument otherwise).
  void AddRow(const std::string& id, const FeatureVector& fv, std::optional<QualityClass> label);
  void AddRow(const std::string& id, const double* values, std::optional<QualityClass> label);

  size_t rows() const { return ids_.size(); }
  size_t cols() const { return columns_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<std::optional<QualityClass>>& labels() const { return labels_; }
  const double* row(size_t r) const { return values_.data() + r * cols(); }
  double* mutable_row(size_t r) { return values_.data() + r * cols(); }
  double at(size_t r, size_t c) const { return values_[r * cols() + c]; }
  bool all_labeled() const;

  FeatureMatrix SelectRows(const std::vector<size_t>& rows) const;
  FeatureMatrix SelectColumns(const std::vector<size_t>& cols) const;
  // Columns belonging to any of the experiment groups, in matrix order.
  std::vector<size_t> ColumnsOf(const std::set<ExperimentGroup>& groups) const;
  std::optional<size_t> ColumnIndex(const std::string& name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> ids_;
  std::vector<double> values_;
  std::vector<std::optional<QualityClass>> labels_;
};

// CSV with header "id,<columns...>,label"; values printed with 17
// significant digits, empty label for unlabelled rows.
void WriteCsv(const FeatureMatrix& m, std::ostream& out);
// Throws RecordError for malformed rows or non-finite values.
FeatureMatrix ReadCsv(std::istream& in, const std::string& source = "<csv>");
FeatureMatrix ReadCsvFile(const std::string& path);

// FNV-1a 64 over the newline-joined column names, as 16 hex digits.
std::string ColumnChecksum(const std::vector<std::string>& columns);

// Per-column z-scoring. Columns with zero variance are centred only.
class Standardizer {
 public:
  void Fit(const FeatureMatrix& m);
  void Transform(const double* in, double* out) const;
  FeatureMatrix Transform(const FeatureMatrix& m) const;

  const std::vector<double>& mean() const { return mean_; }
  const std::vector<double>& scale() const { return scale_; }
  // Row ids seen by Fit; kept for the leakage audit, not serialized.
  const std::vector<std::string>& fitted_ids() const { return fitted_ids_; }

  nlohmann::json ToJson() const;
  static Standardizer FromJson(const nlohmann::json& j);

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
  std::vector<std::string> fitted_ids_;
};

}  // namespace wikiqual

#endif  // WIKIQUAL_FEATURE_MATRIX_H_
