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

#include "wikiqual/feature_matrix.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "wikiqual/errors.h"
#include "wikiqual/random.h"
#include "wikiqual/registry.h"

namespace wikiqual {

FeatureMatrix::FeatureMatrix(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void FeatureMatrix::AddRow(const std::string& id, const FeatureVector& fv,
                           std::optional<QualityClass> label) {
  if (columns_.empty() && ids_.empty()) columns_ = fv.names();
  if (fv.size() != columns_.size()) {
    throw std::invalid_argument("row '" + id + "' has " + std::to_string(fv.size()) +
                                " features, matrix has " + std::to_string(columns_.size()));
  }
  for (size_t c = 0; c < fv.size(); ++c) {
    if (fv[c].name != columns_[c]) {
      throw std::invalid_argument("row '" + id + "': column " + std::to_string(c) + " is '" +
                                  fv[c].name + "', expected '" + columns_[c] + "'");
    }
  }
  const std::vector<double> v = fv.values();
  AddRow(id, v.data(), label);
}

void FeatureMatrix::AddRow(const std::string& id, const double* values,
                           std::optional<QualityClass> label) {
  ids_.push_back(id);
  values_.insert(values_.end(), values, values + cols());
  labels_.push_back(label);
}

bool FeatureMatrix::all_labeled() const {
  for (const auto& l : labels_) {
    if (!l) return false;
  }
  return true;
}

FeatureMatrix FeatureMatrix::SelectRows(const std::vector<size_t>& rows) const {
  FeatureMatrix out(columns_);
  out.ids_.reserve(rows.size());
  out.values_.reserve(rows.size() * cols());
  for (size_t r : rows) out.AddRow(ids_.at(r), row(r), labels_[r]);
  return out;
}

FeatureMatrix FeatureMatrix::SelectColumns(const std::vector<size_t>& cols) const {
  std::vector<std::string> names;
  for (size_t c : cols) names.push_back(columns_.at(c));
  FeatureMatrix out(std::move(names));
  std::vector<double> buf(cols.size());
  for (size_t r = 0; r < rows(); ++r) {
    for (size_t j = 0; j < cols.size(); ++j) buf[j] = at(r, cols[j]);
    out.AddRow(ids_[r], buf.data(), labels_[r]);
  }
  return out;
}

std::vector<size_t> FeatureMatrix::ColumnsOf(const std::set<ExperimentGroup>& groups) const {
  std::vector<size_t> out;
  for (size_t c = 0; c < cols(); ++c) {
    const auto g = GroupOfColumn(columns_[c]);
    if (!g) throw DataError("unknown feature column '" + columns_[c] + "'");
    if (groups.count(ExperimentGroupOf(*g))) out.push_back(c);
  }
  return out;
}

std::optional<size_t> FeatureMatrix::ColumnIndex(const std::string& name) const {
  for (size_t c = 0; c < cols(); ++c) {
    if (columns_[c] == name) return c;
  }
  return std::nullopt;
}

namespace {

void WriteField(const std::string& s, std::ostream& out) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

// Splits one CSV record; quoted fields may span lines.
bool ReadRecord(std::istream& in, std::vector<std::string>* fields, int* line) {
  fields->clear();
  std::string field;
  bool quoted = false, any = false;
  int c;
  while ((c = in.get()) != EOF) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++*line;
        field += static_cast<char>(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields->push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      ++*line;
      break;
    } else if (c != '\r') {
      field += static_cast<char>(c);
    }
  }
  if (!any) return false;
  fields->push_back(std::move(field));
  return true;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void WriteCsv(const FeatureMatrix& m, std::ostream& out) {
  out << "id";
  for (const std::string& c : m.columns()) {
    out << ',';
    WriteField(c, out);
  }
  out << ",label\n";
  for (size_t r = 0; r < m.rows(); ++r) {
    WriteField(m.ids()[r], out);
    const double* row = m.row(r);
    for (size_t c = 0; c < m.cols(); ++c) out << ',' << FormatDouble(row[c]);
    out << ',';
    if (m.labels()[r]) out << ToString(*m.labels()[r]);
    out << '\n';
  }
}

FeatureMatrix ReadCsv(std::istream& in, const std::string& source) {
  std::vector<std::string> fields;
  int line = 0;
  if (!ReadRecord(in, &fields, &line)) throw DataError(source + ": empty feature matrix file");
  if (fields.size() < 2 || fields.front() != "id" || fields.back() != "label") {
    throw RecordError(source, 1, "header", "expected 'id,<features...>,label'");
  }
  FeatureMatrix m(std::vector<std::string>(fields.begin() + 1, fields.end() - 1));
  std::vector<double> values(m.cols());
  while (true) {
    const int record_line = line + 1;
    if (!ReadRecord(in, &fields, &line)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != m.cols() + 2) {
      throw RecordError(source, record_line, "row",
                        "expected " + std::to_string(m.cols() + 2) + " fields, got " +
                            std::to_string(fields.size()));
    }
    for (size_t c = 0; c < m.cols(); ++c) {
      const std::string& f = fields[c + 1];
      size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(f, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != f.size() || f.empty() || !std::isfinite(v)) {
        throw RecordError(source, record_line, m.columns()[c], "not a finite number: '" + f + "'");
      }
      values[c] = v;
    }
    std::optional<QualityClass> label;
    if (!fields.back().empty()) {
      label = ParseQualityClass(fields.back());
      if (!label) throw RecordError(source, record_line, "label", "unknown class '" + fields.back() + "'");
    }
    m.AddRow(fields[0], values.data(), label);
  }
  return m;
}

FeatureMatrix ReadCsvFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open feature matrix " + path);
  return ReadCsv(in, path);
}

std::string ColumnChecksum(const std::vector<std::string>& columns) {
  uint64_t h = Fnv1a64("");
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) h = Fnv1a64("\n", h);
    h = Fnv1a64(columns[i], h);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void Standardizer::Fit(const FeatureMatrix& m) {
  const size_t d = m.cols();
  mean_.assign(d, 0.0);
  scale_.assign(d, 1.0);
  fitted_ids_ = m.ids();
  if (m.rows() == 0) return;
  const double n = static_cast<double>(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < d; ++c) mean_[c] += m.at(r, c);
  }
  for (double& v : mean_) v /= n;
  std::vector<double> var(d, 0.0);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < d; ++c) {
      const double x = m.at(r, c) - mean_[c];
      var[c] += x * x;
    }
  }
  for (size_t c = 0; c < d; ++c) {
    const double sd = std::sqrt(var[c] / n);
    scale_[c] = sd > 1e-12 ? sd : 1.0;
  }
}

void Standardizer::Transform(const double* in, double* out) const {
  for (size_t c = 0; c < mean_.size(); ++c) out[c] = (in[c] - mean_[c]) / scale_[c];
}

FeatureMatrix Standardizer::Transform(const FeatureMatrix& m) const {
  FeatureMatrix out(m.columns());
  std::vector<double> buf(m.cols());
  for (size_t r = 0; r < m.rows(); ++r) {
    Transform(m.row(r), buf.data());
    out.AddRow(m.ids()[r], buf.data(), m.labels()[r]);
  }
  return out;
}

nlohmann::json Standardizer::ToJson() const { return {{"mean", mean_}, {"scale", scale_}}; }

Standardizer Standardizer::FromJson(const nlohmann::json& j) {
  Standardizer s;
  s.mean_ = j.at("mean").get<std::vector<double>>();
  s.scale_ = j.at("scale").get<std::vector<double>>();
  if (s.mean_.size() != s.scale_.size()) throw DataError("standardizer: size mismatch");
  return s;
}

}  // namespace wikiqual
