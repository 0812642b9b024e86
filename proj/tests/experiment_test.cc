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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>

#include "oracles.h"
#include "test_util.h"
#include "wikiqual/errors.h"
#include "wikiqual/experiment.h"
#include "wikiqual/pipeline.h"
#include "wikiqual/registry.h"
#include "wikiqual/synthetic.h"

using namespace wikiqual;
using nlohmann::json;

namespace {

// Extracted once: the synthetic corpus takes a moment to tag.
struct Extracted {
  Corpus corpus;
  std::vector<ArticleFeatures> articles;
};

const Extracted& SyntheticExtraction() {
  static const Extracted e = [] {
    testing::TempDir dir;
    SyntheticOptions opt;
    opt.articles_per_class = 6;
    opt.seed = 5;
    Extracted out;
    out.corpus = LoadCorpus(WriteSyntheticCorpus(dir.path(), opt));
    static const Resources res = Resources::LoadFromDirectory(Resources::DefaultDirectory());
    ExtractOptions eo;
    eo.now = opt.now;
    out.articles = ExtractCorpus(out.corpus, res, eo);
    return out;
  }();
  return e;
}

}  // namespace

TEST_CASE("stratified folds on 700 balanced rows") {
  const FeatureMatrix x = oracle::Noise(100, 2, 1);
  const std::vector<int> folds = StratifiedFolds(x, 10, 42);
  std::vector<std::vector<int>> count(10, std::vector<int>(7, 0));
  for (size_t r = 0; r < x.rows(); ++r) ++count[folds[r]][ToOrdinal(*x.labels()[r])];
  for (int k = 0; k < 10; ++k) {
    int total = 0;
    for (int c = 0; c < 7; ++c) {
      CHECK(count[k][c] == 10);
      total += count[k][c];
    }
    CHECK(total == 70);
  }
  CHECK(StratifiedFolds(x, 10, 42) == folds);
  CHECK(StratifiedFolds(x, 10, 43) != folds);
}

TEST_CASE("fold assignment does not depend on row order") {
  const FeatureMatrix x = oracle::Noise(9, 2, 2);
  std::vector<size_t> order(x.rows());
  for (size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  const FeatureMatrix reversed = x.SelectRows(order);
  const auto a = StratifiedFolds(x, 4, 7);
  const auto b = StratifiedFolds(reversed, 4, 7);
  for (size_t i = 0; i < order.size(); ++i) CHECK(b[i] == a[order[i]]);
}

TEST_CASE("fold sizes differ by at most one") {
  const FeatureMatrix x = oracle::Noise(3, 2, 3);  // 21 rows, 10 folds
  std::vector<int> size(10, 0);
  for (int f : StratifiedFolds(x, 10, 1)) ++size[f];
  const auto [lo, hi] = std::minmax_element(size.begin(), size.end());
  CHECK(*hi - *lo <= 1);
}

TEST_CASE("fold validation") {
  FeatureMatrix one(oracle::DimensionNames(1));
  const double v = 0;
  one.AddRow("a", &v, QualityClass::A);
  CHECK_THROWS_AS(StratifiedFolds(one, 10, 1), DataError);
  CHECK_THROWS_AS(StratifiedFolds(oracle::Noise(3, 1, 1), 1, 1), UsageError);
  FeatureMatrix unlabelled(oracle::DimensionNames(1));
  unlabelled.AddRow("a", &v, QualityClass::A);
  unlabelled.AddRow("b", &v, std::nullopt);
  CHECK_THROWS_AS(StratifiedFolds(unlabelled, 2, 1), DataError);
}

TEST_CASE("label-independent features give chance accuracy") {
  const FeatureMatrix x = oracle::Noise(100, 5, 8);
  CvOptions opt;
  for (Algorithm a : {Algorithm::kDT, Algorithm::kKNN, Algorithm::kLR, Algorithm::kNB}) {
    INFO(ToString(a));
    const CvResult r = CrossValidate(x, a, json(), opt);
    CHECK(r.fold_accuracy.size() == 10);
    CHECK(std::abs(r.mean_accuracy - 1.0 / 7) <= 0.05);
  }
}

TEST_CASE("separated blobs cross-validate well") {
  const FeatureMatrix x = oracle::Blobs(20, 7, 4);
  const CvResult r = CrossValidate(x, Algorithm::kKNN, json(), CvOptions{});
  CHECK(r.mean_accuracy >= 0.95);
  CHECK(r.mean_mse >= 0.0);
}

TEST_CASE("leakage audit covers every fold") {
  const FeatureMatrix x = oracle::Blobs(10, 7, 5);
  CvOptions opt;
  opt.audit_leakage = true;
  CHECK(CrossValidate(x, Algorithm::kKNN, json(), opt).audited_folds == 10);
  CHECK(CrossValidate(x, Algorithm::kDT, json(), opt).audited_folds == 10);
}

TEST_CASE("leakage audit with per-fold trigram refits") {
  const Extracted& e = SyntheticExtraction();
  const TrigramSelector sel = FitSelectorOnLabelled(e.articles, 10, 10);
  const FeatureMatrix x = BuildFeatureMatrix(e.articles, sel);
  std::map<std::string, TrigramProfile> profiles;
  for (const ArticleFeatures& a : e.articles) profiles[a.id] = a.profile;
  CvOptions opt;
  opt.folds = 3;
  opt.audit_leakage = true;
  opt.profiles = &profiles;
  const CvResult r = CrossValidate(x, Algorithm::kNB, json(), opt);
  CHECK(r.audited_folds == 3);
  CHECK(std::isfinite(r.mean_accuracy));
}

TEST_CASE("one row per class still produces a full table") {
  const FeatureMatrix x = oracle::Blobs(1, 7, 6);
  const auto groups = std::vector<std::set<ExperimentGroup>>{
      {ExperimentGroup::kText, ExperimentGroup::kReview, ExperimentGroup::kNetwork}};
  FeatureMatrix named(std::vector<std::string>{"character_count", "word_count", "age_days",
                                               "review_count", "pagerank", "in_degree",
                                               "out_degree"});
  for (size_t r = 0; r < x.rows(); ++r) named.AddRow(x.ids()[r], x.row(r), x.labels()[r]);
  std::map<Algorithm, json> params;
  for (Algorithm a : kAllAlgorithms) params[a] = json::object();
  params[Algorithm::kRF] = {{"n_trees", 10}};
  params[Algorithm::kGB] = {{"n_rounds", 10}};
  params[Algorithm::kNN] = {{"epochs", 10}};
  CvOptions opt;
  opt.folds = 7;
  const std::vector<Algorithm> algos(kAllAlgorithms.begin(), kAllAlgorithms.end());
  const ExperimentTable t = RunExperiment(named, groups, {"All"}, algos, params, opt);
  REQUIRE(t.cells.size() == 8);
  for (const auto& row : t.cells) {
    REQUIRE(row.size() == 1);
    CHECK(std::isfinite(row[0].accuracy));
    CHECK(std::isfinite(row[0].mse));
  }
}

TEST_CASE("table writers") {
  ExperimentTable t;
  t.column_names = {"TF", "RF", "NF"};
  t.algorithms = {Algorithm::kDT, Algorithm::kGB};
  t.cells = {{{0.5, 0.1, 1.5, 0.2}, {0.25, 0.05, 2, 0.3}, {0.75, 0, 1, 0}},
             {{0.6, 0.1, 1.2, 0.2}, {0.3, 0.05, 2.5, 0.3}, {0.7, 0, 1.1, 0}}};
  std::ostringstream csv;
  WriteTableCsv(t, Metric::kAccuracy, csv);
  std::istringstream lines(csv.str());
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(n == 3);
  CHECK(csv.str().rfind("classifier,TF,TF_std,", 0) == 0);
  std::ostringstream text;
  WriteTableText(t, Metric::kMse, "MSE", text);
  CHECK(text.str().find("GB") != std::string::npos);
  CHECK(text.str().find("2.5") != std::string::npos);
}

TEST_CASE("extracted columns follow the registry") {
  const Extracted& e = SyntheticExtraction();
  REQUIRE(e.articles.size() == 42);
  const auto& reg = ScalarFeatureRegistry();
  for (const ArticleFeatures& a : e.articles) {
    REQUIRE(a.scalars.size() == reg.size());
    size_t i = 0;
    for (const Feature& f : a.scalars) {
      CHECK(f.name == reg[i].name);
      CHECK(f.group == reg[i].group);
      CHECK(std::isfinite(f.value));
      ++i;
    }
  }
  const TrigramSelector sel = FitSelectorOnLabelled(e.articles, kDefaultCharTrigrams,
                                                    kDefaultPosTrigrams);
  const FeatureMatrix x = BuildFeatureMatrix(e.articles, sel);
  const auto full = FeatureRegistry(kDefaultCharTrigrams, kDefaultPosTrigrams);
  REQUIRE(x.cols() == full.size());
  for (size_t c = 0; c < full.size(); ++c) CHECK(x.columns()[c] == full[c].name);
}

TEST_CASE("serial and parallel extraction agree") {
  const Extracted& e = SyntheticExtraction();
  static const Resources res = Resources::LoadFromDirectory(Resources::DefaultDirectory());
  ExtractOptions eo;
  eo.now = SyntheticOptions{}.now;
  const auto serial = ExtractCorpus(e.corpus, res, eo, Execution::kSerial);
  const TrigramSelector sel = FitSelectorOnLabelled(e.articles, 20, 20);
  std::ostringstream a, b;
  WriteCsv(BuildFeatureMatrix(e.articles, sel), a);
  WriteCsv(BuildFeatureMatrix(serial, sel), b);
  CHECK(a.str() == b.str());
}

TEST_CASE("feature matrix CSV round trip") {
  const FeatureMatrix x = oracle::Noise(3, 4, 9);
  FeatureMatrix y = x;
  const double v[4] = {0.1, 1e-300, -3, 1.0 / 3};
  y.AddRow("unlabelled", v, std::nullopt);
  std::ostringstream out;
  WriteCsv(y, out);
  std::istringstream in(out.str());
  const FeatureMatrix back = ReadCsv(in);
  CHECK(back.columns() == y.columns());
  CHECK(back.ids() == y.ids());
  CHECK(back.labels() == y.labels());
  for (size_t r = 0; r < y.rows(); ++r) {
    for (size_t c = 0; c < y.cols(); ++c) CHECK(back.at(r, c) == y.at(r, c));
  }
  std::istringstream bad("id,a,label\nr1,nan,B\n");
  CHECK_THROWS_AS(ReadCsv(bad), RecordError);
}

TEST_CASE("standardizer") {
  FeatureMatrix x(std::vector<std::string>{"a", "b"});
  const double rows[3][2] = {{1, 5}, {2, 5}, {3, 5}};
  for (int r = 0; r < 3; ++r) x.AddRow("r" + std::to_string(r), rows[r], QualityClass::C);
  Standardizer s;
  s.Fit(x);
  CHECK(s.mean()[0] == 2.0);
  CHECK(s.scale()[0] == doctest::Approx(std::sqrt(2.0 / 3)));
  CHECK(s.scale()[1] == 1.0);  // constant column is left unscaled
  const FeatureMatrix t = s.Transform(x);
  CHECK(t.at(1, 0) == 0.0);
  CHECK(t.at(0, 1) == 0.0);
  const Standardizer back = Standardizer::FromJson(s.ToJson());
  CHECK(back.mean() == s.mean());
  CHECK(back.scale() == s.scale());
}

TEST_CASE("extraction reports a ProbReview iteration cap") {
  const Extracted& e = SyntheticExtraction();
  static const Resources res = Resources::LoadFromDirectory(Resources::DefaultDirectory());
  ExtractOptions eo;
  eo.now = SyntheticOptions{}.now;
  std::vector<std::string> warnings;
  ExtractCorpus(e.corpus, res, eo, Execution::kParallel, &warnings);
  CHECK(warnings.empty());
  eo.prob_review.max_iterations = 2;
  ExtractCorpus(e.corpus, res, eo, Execution::kParallel, &warnings);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("ProbReview") != std::string::npos);
}
