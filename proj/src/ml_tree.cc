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

// Tree ensembles: CART, random forest and gradient boosting.

#include <algorithm>
#include <cmath>
#include <limits>

#include "ml_internal.h"
#include "wikiqual/errors.h"
#include "wikiqual/random.h"

namespace wikiqual::internal {
namespace {

using json = nlohmann::json;
using Dist = std::array<double, kNumClasses>;

double Gini(const Dist& counts, double total) {
  if (total <= 0) return 0.0;
  double s = 0.0;
  for (double c : counts) s += (c / total) * (c / total);
  return 1.0 - s;
}

// CART with Gini impurity. Rows may repeat (bootstrap samples).
class Cart {
 public:
  struct Options {
    int max_depth = 0;  // 0: unlimited
    int min_samples_split = 2;
    int min_samples_leaf = 1;
    int max_features = 0;  // 0: all
  };

  void Fit(const Dataset& data, std::vector<size_t> rows, const Options& opt, Rng* rng) {
    feature_.clear();
    threshold_.clear();
    left_.clear();
    right_.clear();
    dist_.clear();
    struct Work {
      int node;
      int depth;
      std::vector<size_t> rows;
    };
    std::vector<Work> stack;
    stack.push_back({NewNode(), 0, std::move(rows)});
    std::vector<int> features(data.d);
    std::vector<std::pair<double, int>> column;

    while (!stack.empty()) {
      Work w = std::move(stack.back());
      stack.pop_back();
      Dist counts{};
      for (size_t r : w.rows) counts[data.y[r]] += 1;
      const double total = static_cast<double>(w.rows.size());
      Dist& d = dist_[w.node];
      for (int k = 0; k < kNumClasses; ++k) d[k] = counts[k] / total;

      const double impurity = Gini(counts, total);
      if (impurity <= 0.0 || (opt.max_depth > 0 && w.depth >= opt.max_depth) ||
          static_cast<int>(w.rows.size()) < opt.min_samples_split) {
        continue;
      }

      for (size_t f = 0; f < data.d; ++f) features[f] = static_cast<int>(f);
      size_t tried = data.d;
      if (opt.max_features > 0 && static_cast<size_t>(opt.max_features) < data.d) {
        tried = opt.max_features;
        for (size_t i = 0; i < tried; ++i) {
          std::swap(features[i], features[i + rng->Below(data.d - i)]);
        }
      }

      int best_f = -1;
      double best_t = 0.0, best_score = std::numeric_limits<double>::infinity();
      const int min_leaf = std::max(1, opt.min_samples_leaf);
      for (size_t fi = 0; fi < tried; ++fi) {
        const int f = features[fi];
        column.clear();
        for (size_t r : w.rows) column.emplace_back(data.row(r)[f], data.y[r]);
        std::sort(column.begin(), column.end());
        if (column.front().first == column.back().first) continue;
        Dist left{};
        Dist right = counts;
        for (size_t j = 0; j + 1 < column.size(); ++j) {
          left[column[j].second] += 1;
          right[column[j].second] -= 1;
          if (column[j].first == column[j + 1].first) continue;
          const double nl = static_cast<double>(j + 1), nr = total - nl;
          if (nl < min_leaf || nr < min_leaf) continue;
          const double score = nl * Gini(left, nl) + nr * Gini(right, nr);
          if (score < best_score) {
            best_score = score;
            best_f = f;
            const double a = column[j].first, b = column[j + 1].first;
            const double mid = a + (b - a) / 2.0;
            best_t = mid < b ? mid : a;
          }
        }
      }
      if (best_f < 0) continue;

      std::vector<size_t> lrows, rrows;
      for (size_t r : w.rows) (data.row(r)[best_f] <= best_t ? lrows : rrows).push_back(r);
      const int l = NewNode(), r = NewNode();
      feature_[w.node] = best_f;
      threshold_[w.node] = best_t;
      left_[w.node] = l;
      right_[w.node] = r;
      stack.push_back({r, w.depth + 1, std::move(rrows)});
      stack.push_back({l, w.depth + 1, std::move(lrows)});
    }
  }

  const Dist& Leaf(const double* x) const {
    int n = 0;
    while (feature_[n] >= 0) n = x[feature_[n]] <= threshold_[n] ? left_[n] : right_[n];
    return dist_[n];
  }

  json State() const {
    return {{"feature", feature_}, {"threshold", threshold_}, {"left", left_},
            {"right", right_}, {"dist", dist_}};
  }
  void LoadState(const json& j) {
    feature_ = j.at("feature").get<std::vector<int>>();
    threshold_ = j.at("threshold").get<std::vector<double>>();
    left_ = j.at("left").get<std::vector<int>>();
    right_ = j.at("right").get<std::vector<int>>();
    dist_ = j.at("dist").get<std::vector<Dist>>();
    const size_t n = feature_.size();
    if (n == 0 || threshold_.size() != n || left_.size() != n || right_.size() != n ||
        dist_.size() != n) {
      throw DataError("decision tree state: inconsistent node arrays");
    }
    for (size_t i = 0; i < n; ++i) {
      if (feature_[i] >= 0 && (left_[i] <= static_cast<int>(i) || right_[i] <= static_cast<int>(i) ||
                               left_[i] >= static_cast<int>(n) || right_[i] >= static_cast<int>(n))) {
        throw DataError("decision tree state: bad child index");
      }
    }
  }
  size_t node_count() const { return feature_.size(); }

 private:
  int NewNode() {
    feature_.push_back(-1);
    threshold_.push_back(0.0);
    left_.push_back(-1);
    right_.push_back(-1);
    dist_.push_back(Dist{});
    return static_cast<int>(feature_.size()) - 1;
  }

  std::vector<int> feature_;
  std::vector<double> threshold_;
  std::vector<int> left_, right_;
  std::vector<Dist> dist_;
};

std::vector<size_t> AllRows(size_t n) {
  std::vector<size_t> rows(n);
  for (size_t i = 0; i < n; ++i) rows[i] = i;
  return rows;
}

class DecisionTree : public Classifier {
 public:
  explicit DecisionTree(const json& p) {
    opt_.max_depth = p.at("max_depth").get<int>();
    opt_.min_samples_split = p.at("min_samples_split").get<int>();
    opt_.min_samples_leaf = p.at("min_samples_leaf").get<int>();
  }
  void Fit(const Dataset& data, uint64_t seed) override {
    Rng rng(seed);
    tree_.Fit(data, AllRows(data.n), opt_, &rng);
  }
  int Predict(const double* x) const override { return ArgMax(tree_.Leaf(x)); }
  json State() const override { return tree_.State(); }
  void LoadState(const json& s) override { tree_.LoadState(s); }

 private:
  Cart::Options opt_;
  Cart tree_;
};

class RandomForest : public Classifier {
 public:
  RandomForest(const json& p, Execution exec) : exec_(exec) {
    trees_.resize(p.at("n_trees").get<int>());
    opt_.max_depth = p.at("max_depth").get<int>();
    opt_.min_samples_split = p.at("min_samples_split").get<int>();
    opt_.min_samples_leaf = p.at("min_samples_leaf").get<int>();
    max_features_ = p.at("max_features").get<std::string>();
  }
  void Fit(const Dataset& data, uint64_t seed) override {
    Cart::Options opt = opt_;
    if (max_features_ == "sqrt") {
      opt.max_features = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(data.d))));
    } else if (max_features_ == "all") {
      opt.max_features = 0;
    } else {
      throw UsageError("random forest: max_features must be 'sqrt' or 'all'");
    }
    const int n = static_cast<int>(trees_.size());
    const bool parallel = exec_ == Execution::kParallel;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int t = 0; t < n; ++t) {
      Rng rng(DeriveSeed(seed, t));
      std::vector<size_t> sample(data.n);
      for (size_t& r : sample) r = rng.Below(data.n);
      trees_[t].Fit(data, std::move(sample), opt, &rng);
    }
  }
  int Predict(const double* x) const override {
    Dist sum{};
    for (const Cart& t : trees_) {
      const Dist& d = t.Leaf(x);
      for (int k = 0; k < kNumClasses; ++k) sum[k] += d[k];
    }
    return ArgMax(sum);
  }
  json State() const override {
    json a = json::array();
    for (const Cart& t : trees_) a.push_back(t.State());
    return {{"trees", a}};
  }
  void LoadState(const json& s) override {
    trees_.clear();
    for (const json& t : s.at("trees")) {
      trees_.emplace_back();
      trees_.back().LoadState(t);
    }
    if (trees_.empty()) throw DataError("random forest state: no trees");
  }

 private:
  Execution exec_;
  Cart::Options opt_;
  std::string max_features_;
  std::vector<Cart> trees_;
};

// ---------------------------------------------------------------------------
// Gradient boosting: one-vs-rest logistic loss, regression trees split on
// squared error over histogram bins, Newton-step leaf values.

struct Bins {
  std::vector<std::vector<double>> cuts;  // per feature, ascending
  std::vector<uint8_t> codes;             // n x d, row-major

  void Build(const Dataset& data, int max_bins) {
    cuts.assign(data.d, {});
    codes.assign(data.n * data.d, 0);
    std::vector<double> col(data.n);
    for (size_t f = 0; f < data.d; ++f) {
      for (size_t i = 0; i < data.n; ++i) col[i] = data.row(i)[f];
      std::sort(col.begin(), col.end());
      std::vector<double>& c = cuts[f];
      for (int b = 1; b < max_bins; ++b) {
        const size_t pos = static_cast<size_t>(static_cast<double>(b) * data.n / max_bins);
        if (pos == 0 || pos >= data.n) continue;
        // Smallest boundary at or after pos separating distinct values.
        size_t p = pos;
        while (p < data.n && col[p] == col[p - 1]) ++p;
        if (p >= data.n) continue;
        const double a = col[p - 1], bv = col[p];
        double mid = a + (bv - a) / 2.0;
        if (!(mid < bv)) mid = a;
        if (c.empty() || mid > c.back()) c.push_back(mid);
      }
      for (size_t i = 0; i < data.n; ++i) {
        const double v = data.row(i)[f];
        codes[i * data.d + f] = static_cast<uint8_t>(
            std::lower_bound(c.begin(), c.end(), v) - c.begin());
      }
    }
  }
};

class RegressionTree {
 public:
  // Fits `target` (residuals); leaves take sum(target) / sum(hess).
  void Fit(const Dataset& data, const Bins& bins, const std::vector<double>& target,
           const std::vector<double>& hess, int max_depth, int min_leaf) {
    feature_.assign(1, -1);
    threshold_.assign(1, 0.0);
    left_.assign(1, -1);
    right_.assign(1, -1);
    value_.assign(1, 0.0);
    struct Work {
      int node, depth;
      std::vector<size_t> rows;
    };
    std::vector<Work> stack;
    stack.push_back({0, 0, AllRows(data.n)});
    const size_t d = data.d;
    std::vector<double> hsum;
    std::vector<int> hcnt;
    while (!stack.empty()) {
      Work w = std::move(stack.back());
      stack.pop_back();
      double s = 0.0, h = 0.0;
      for (size_t r : w.rows) {
        s += target[r];
        h += hess[r];
      }
      value_[w.node] = h > 1e-12 ? s / h : 0.0;
      const double n = static_cast<double>(w.rows.size());
      if (w.depth >= max_depth || static_cast<int>(w.rows.size()) < 2 * min_leaf) continue;

      int best_f = -1, best_b = -1;
      double best_gain = 1e-12;
      for (size_t f = 0; f < d; ++f) {
        const size_t nb = bins.cuts[f].size() + 1;
        if (nb < 2) continue;
        hsum.assign(nb, 0.0);
        hcnt.assign(nb, 0);
        for (size_t r : w.rows) {
          const uint8_t b = bins.codes[r * d + f];
          hsum[b] += target[r];
          ++hcnt[b];
        }
        double sl = 0.0;
        int nl = 0;
        for (size_t b = 0; b + 1 < nb; ++b) {
          sl += hsum[b];
          nl += hcnt[b];
          const int nr = static_cast<int>(w.rows.size()) - nl;
          if (nl < min_leaf || nr < min_leaf) continue;
          const double sr = s - sl;
          const double gain = sl * sl / nl + sr * sr / nr - s * s / n;
          if (gain > best_gain) {
            best_gain = gain;
            best_f = static_cast<int>(f);
            best_b = static_cast<int>(b);
          }
        }
      }
      if (best_f < 0) continue;
      std::vector<size_t> lrows, rrows;
      for (size_t r : w.rows) {
        (bins.codes[r * d + best_f] <= best_b ? lrows : rrows).push_back(r);
      }
      const int l = NewNode(), r = NewNode();
      feature_[w.node] = best_f;
      threshold_[w.node] = bins.cuts[best_f][best_b];
      left_[w.node] = l;
      right_[w.node] = r;
      stack.push_back({r, w.depth + 1, std::move(rrows)});
      stack.push_back({l, w.depth + 1, std::move(lrows)});
    }
  }

  double Eval(const double* x) const {
    int n = 0;
    while (feature_[n] >= 0) n = x[feature_[n]] <= threshold_[n] ? left_[n] : right_[n];
    return value_[n];
  }

  json State() const {
    return {{"feature", feature_}, {"threshold", threshold_}, {"left", left_},
            {"right", right_}, {"value", value_}};
  }
  void LoadState(const json& j) {
    feature_ = j.at("feature").get<std::vector<int>>();
    threshold_ = j.at("threshold").get<std::vector<double>>();
    left_ = j.at("left").get<std::vector<int>>();
    right_ = j.at("right").get<std::vector<int>>();
    value_ = j.at("value").get<std::vector<double>>();
    const size_t n = feature_.size();
    if (n == 0 || threshold_.size() != n || left_.size() != n || right_.size() != n ||
        value_.size() != n) {
      throw DataError("regression tree state: inconsistent node arrays");
    }
    for (size_t i = 0; i < n; ++i) {
      if (feature_[i] >= 0 && (left_[i] <= static_cast<int>(i) || right_[i] <= static_cast<int>(i) ||
                               left_[i] >= static_cast<int>(n) || right_[i] >= static_cast<int>(n))) {
        throw DataError("regression tree state: bad child index");
      }
    }
  }

 private:
  int NewNode() {
    feature_.push_back(-1);
    threshold_.push_back(0.0);
    left_.push_back(-1);
    right_.push_back(-1);
    value_.push_back(0.0);
    return static_cast<int>(feature_.size()) - 1;
  }

  std::vector<int> feature_;
  std::vector<double> threshold_;
  std::vector<int> left_, right_;
  std::vector<double> value_;
};

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

class GradientBoosting : public Classifier {
 public:
  explicit GradientBoosting(const json& p)
      : rounds_(p.at("n_rounds").get<int>()),
        depth_(p.at("max_depth").get<int>()),
        rate_(p.at("learning_rate").get<double>()),
        min_leaf_(p.at("min_samples_leaf").get<int>()),
        max_bins_(p.at("max_bins").get<int>()) {
    if (max_bins_ < 2 || max_bins_ > 256) throw UsageError("gradient boosting: max_bins in [2, 256]");
  }

  void Fit(const Dataset& data, uint64_t) override {
    Bins bins;
    bins.Build(data, max_bins_);
    present_.fill(false);
    init_.fill(0.0);
    trees_.assign(kNumClasses, {});
    std::array<double, kNumClasses> counts{};
    for (int y : data.y) counts[y] += 1;
    std::vector<double> f(data.n), target(data.n), hess(data.n);
    for (int k = 0; k < kNumClasses; ++k) {
      if (counts[k] == 0) continue;
      present_[k] = true;
      const double p = std::clamp(counts[k] / data.n, 1e-6, 1 - 1e-6);
      init_[k] = std::log(p / (1 - p));
      std::fill(f.begin(), f.end(), init_[k]);
      trees_[k].resize(rounds_);
      for (int m = 0; m < rounds_; ++m) {
        for (size_t i = 0; i < data.n; ++i) {
          const double pi = Sigmoid(f[i]);
          target[i] = (data.y[i] == k ? 1.0 : 0.0) - pi;
          hess[i] = pi * (1.0 - pi);
        }
        RegressionTree& tree = trees_[k][m];
        tree.Fit(data, bins, target, hess, depth_, min_leaf_);
        for (size_t i = 0; i < data.n; ++i) f[i] += rate_ * tree.Eval(data.row(i));
      }
    }
  }

  int Predict(const double* x) const override {
    int best = -1;
    double best_score = 0.0;
    for (int k = 0; k < kNumClasses; ++k) {
      if (!present_[k]) continue;
      double s = init_[k];
      for (const RegressionTree& t : trees_[k]) s += rate_ * t.Eval(x);
      if (best < 0 || s > best_score) {
        best = k;
        best_score = s;
      }
    }
    return std::max(best, 0);
  }

  json State() const override {
    json classes = json::array();
    for (int k = 0; k < kNumClasses; ++k) {
      json trees = json::array();
      for (const RegressionTree& t : trees_[k]) trees.push_back(t.State());
      classes.push_back({{"present", present_[k]}, {"init", init_[k]}, {"trees", trees}});
    }
    return {{"classes", classes}};
  }
  void LoadState(const json& s) override {
    const json& classes = s.at("classes");
    if (classes.size() != kNumClasses) throw DataError("gradient boosting state: bad class count");
    trees_.assign(kNumClasses, {});
    for (int k = 0; k < kNumClasses; ++k) {
      present_[k] = classes[k].at("present").get<bool>();
      init_[k] = classes[k].at("init").get<double>();
      for (const json& t : classes[k].at("trees")) {
        trees_[k].emplace_back();
        trees_[k].back().LoadState(t);
      }
    }
  }

 private:
  int rounds_, depth_;
  double rate_;
  int min_leaf_, max_bins_;
  std::array<bool, kNumClasses> present_{};
  std::array<double, kNumClasses> init_{};
  std::vector<std::vector<RegressionTree>> trees_;
};

}  // namespace

std::unique_ptr<Classifier> MakeDecisionTree(const json& params) {
  return std::make_unique<DecisionTree>(params);
}
std::unique_ptr<Classifier> MakeRandomForest(const json& params, Execution exec) {
  return std::make_unique<RandomForest>(params, exec);
}
std::unique_ptr<Classifier> MakeGradientBoosting(const json& params) {
  return std::make_unique<GradientBoosting>(params);
}

}  // namespace wikiqual::internal
