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

// Distance, probabilistic and linear classifiers.

#include <algorithm>
#include <cmath>
#include <limits>

#include "ml_internal.h"
#include "wikiqual/errors.h"
#include "wikiqual/random.h"

namespace wikiqual::internal {
namespace {

using json = nlohmann::json;

std::array<bool, kNumClasses> PresentClasses(const Dataset& data) {
  std::array<bool, kNumClasses> p{};
  for (int y : data.y) p[y] = true;
  return p;
}

int ArgMaxPresent(const std::array<double, kNumClasses>& s,
                  const std::array<bool, kNumClasses>& present) {
  int best = -1;
  for (int k = 0; k < kNumClasses; ++k) {
    if (present[k] && (best < 0 || s[k] > s[best])) best = k;
  }
  return std::max(best, 0);
}

json PresentToJson(const std::array<bool, kNumClasses>& p) {
  return std::vector<bool>(p.begin(), p.end());
}

std::array<bool, kNumClasses> PresentFromJson(const json& j) {
  const auto v = j.get<std::vector<bool>>();
  if (v.size() != kNumClasses) throw DataError("model state: bad class mask");
  std::array<bool, kNumClasses> p{};
  std::copy(v.begin(), v.end(), p.begin());
  return p;
}

double Dot(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------

class Knn : public Classifier {
 public:
  explicit Knn(const json& p) : k_(p.at("k").get<int>()) {
    if (k_ < 1) throw UsageError("knn: k must be >= 1");
  }
  void Fit(const Dataset& data, uint64_t) override {
    d_ = data.d;
    x_ = data.x;
    y_ = data.y;
  }
  int Predict(const double* x) const override {
    const size_t n = y_.size();
    std::vector<std::pair<double, size_t>> dist(n);
    for (size_t i = 0; i < n; ++i) {
      const double* r = x_.data() + i * d_;
      double s = 0.0;
      for (size_t j = 0; j < d_; ++j) s += (r[j] - x[j]) * (r[j] - x[j]);
      dist[i] = {s, i};
    }
    const size_t k = std::min<size_t>(k_, n);
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    std::array<int, kNumClasses> votes{};
    std::array<size_t, kNumClasses> first;
    first.fill(n);
    for (size_t i = 0; i < k; ++i) {
      const int c = y_[dist[i].second];
      ++votes[c];
      first[c] = std::min(first[c], i);
    }
    // Majority vote; ties go to the class with the nearest member.
    int best = y_[dist[0].second];
    for (int c = 0; c < kNumClasses; ++c) {
      if (votes[c] > votes[best] || (votes[c] == votes[best] && first[c] < first[best])) best = c;
    }
    return best;
  }
  json State() const override { return {{"d", d_}, {"x", x_}, {"y", y_}}; }
  void LoadState(const json& s) override {
    d_ = s.at("d").get<size_t>();
    x_ = s.at("x").get<std::vector<double>>();
    y_ = s.at("y").get<std::vector<int>>();
    if (y_.empty() || x_.size() != y_.size() * d_) throw DataError("knn state: size mismatch");
  }

 private:
  int k_;
  size_t d_ = 0;
  std::vector<double> x_;
  std::vector<int> y_;
};

// ---------------------------------------------------------------------------

void Softmax(std::array<double, kNumClasses>* z) {
  const double mx = *std::max_element(z->begin(), z->end());
  double s = 0.0;
  for (double& v : *z) {
    v = std::exp(v - mx);
    s += v;
  }
  for (double& v : *z) v /= s;
}

// Multinomial logistic regression, full-batch gradient descent with L2.
class LogisticRegression : public Classifier {
 public:
  explicit LogisticRegression(const json& p)
      : rate_(p.at("learning_rate").get<double>()),
        iters_(p.at("max_iter").get<int>()),
        l2_(p.at("l2").get<double>()) {}

  void Fit(const Dataset& data, uint64_t) override {
    d_ = data.d;
    present_ = PresentClasses(data);
    w_.assign(kNumClasses * d_, 0.0);
    b_.fill(0.0);
    std::vector<double> gw(w_.size());
    std::array<double, kNumClasses> gb{}, z{};
    const double inv_n = 1.0 / static_cast<double>(data.n);
    for (int it = 0; it < iters_; ++it) {
      std::fill(gw.begin(), gw.end(), 0.0);
      gb.fill(0.0);
      for (size_t i = 0; i < data.n; ++i) {
        const double* x = data.row(i);
        Scores(x, &z);
        Softmax(&z);
        for (int k = 0; k < kNumClasses; ++k) {
          const double g = z[k] - (data.y[i] == k ? 1.0 : 0.0);
          gb[k] += g;
          double* gk = gw.data() + k * d_;
          for (size_t j = 0; j < d_; ++j) gk[j] += g * x[j];
        }
      }
      for (size_t j = 0; j < w_.size(); ++j) w_[j] -= rate_ * (gw[j] * inv_n + l2_ * w_[j]);
      for (int k = 0; k < kNumClasses; ++k) b_[k] -= rate_ * gb[k] * inv_n;
    }
  }
  int Predict(const double* x) const override {
    std::array<double, kNumClasses> z{};
    Scores(x, &z);
    return ArgMaxPresent(z, present_);
  }
  json State() const override {
    return {{"d", d_}, {"w", w_}, {"b", b_}, {"present", PresentToJson(present_)}};
  }
  void LoadState(const json& s) override {
    d_ = s.at("d").get<size_t>();
    w_ = s.at("w").get<std::vector<double>>();
    b_ = s.at("b").get<std::array<double, kNumClasses>>();
    present_ = PresentFromJson(s.at("present"));
    if (w_.size() != kNumClasses * d_) throw DataError("logistic regression state: size mismatch");
  }

 private:
  void Scores(const double* x, std::array<double, kNumClasses>* z) const {
    for (int k = 0; k < kNumClasses; ++k) (*z)[k] = b_[k] + Dot(w_.data() + k * d_, x, d_);
  }

  double rate_;
  int iters_;
  double l2_;
  size_t d_ = 0;
  std::vector<double> w_;
  std::array<double, kNumClasses> b_{};
  std::array<bool, kNumClasses> present_{};
};

// ---------------------------------------------------------------------------

class NaiveBayes : public Classifier {
 public:
  explicit NaiveBayes(const json& p) : smoothing_(p.at("var_smoothing").get<double>()) {}

  void Fit(const Dataset& data, uint64_t) override {
    d_ = data.d;
    present_ = PresentClasses(data);
    mean_.assign(kNumClasses * d_, 0.0);
    var_.assign(kNumClasses * d_, 0.0);
    std::array<double, kNumClasses> count{};
    for (size_t i = 0; i < data.n; ++i) {
      const int c = data.y[i];
      count[c] += 1;
      for (size_t j = 0; j < d_; ++j) mean_[c * d_ + j] += data.row(i)[j];
    }
    for (int c = 0; c < kNumClasses; ++c) {
      for (size_t j = 0; j < d_; ++j) mean_[c * d_ + j] = count[c] > 0 ? mean_[c * d_ + j] / count[c] : 0.0;
    }
    for (size_t i = 0; i < data.n; ++i) {
      const int c = data.y[i];
      for (size_t j = 0; j < d_; ++j) {
        const double e = data.row(i)[j] - mean_[c * d_ + j];
        var_[c * d_ + j] += e * e;
      }
    }
    // Smoothing proportional to the largest overall feature variance.
    double max_var = 0.0;
    for (size_t j = 0; j < d_; ++j) {
      double m = 0.0, v = 0.0;
      for (size_t i = 0; i < data.n; ++i) m += data.row(i)[j];
      m /= static_cast<double>(data.n);
      for (size_t i = 0; i < data.n; ++i) v += (data.row(i)[j] - m) * (data.row(i)[j] - m);
      max_var = std::max(max_var, v / static_cast<double>(data.n));
    }
    const double eps = std::max(smoothing_ * max_var, 1e-300);
    for (int c = 0; c < kNumClasses; ++c) {
      log_prior_[c] = count[c] > 0 ? std::log(count[c] / static_cast<double>(data.n)) : 0.0;
      for (size_t j = 0; j < d_; ++j) {
        var_[c * d_ + j] = (count[c] > 0 ? var_[c * d_ + j] / count[c] : 0.0) + eps;
      }
    }
  }
  int Predict(const double* x) const override {
    std::array<double, kNumClasses> s{};
    for (int c = 0; c < kNumClasses; ++c) {
      if (!present_[c]) continue;
      double ll = log_prior_[c];
      for (size_t j = 0; j < d_; ++j) {
        const double v = var_[c * d_ + j];
        const double e = x[j] - mean_[c * d_ + j];
        ll -= 0.5 * (std::log(2.0 * M_PI * v) + e * e / v);
      }
      s[c] = ll;
    }
    return ArgMaxPresent(s, present_);
  }
  json State() const override {
    return {{"d", d_}, {"mean", mean_}, {"var", var_}, {"log_prior", log_prior_},
            {"present", PresentToJson(present_)}};
  }
  void LoadState(const json& s) override {
    d_ = s.at("d").get<size_t>();
    mean_ = s.at("mean").get<std::vector<double>>();
    var_ = s.at("var").get<std::vector<double>>();
    log_prior_ = s.at("log_prior").get<std::array<double, kNumClasses>>();
    present_ = PresentFromJson(s.at("present"));
    if (mean_.size() != kNumClasses * d_ || var_.size() != mean_.size()) {
      throw DataError("naive Bayes state: size mismatch");
    }
  }

 private:
  double smoothing_;
  size_t d_ = 0;
  std::vector<double> mean_, var_;
  std::array<double, kNumClasses> log_prior_{};
  std::array<bool, kNumClasses> present_{};
};

// ---------------------------------------------------------------------------

// One-vs-rest linear SVM trained with Pegasos-style stochastic subgradient
// steps on the hinge loss; the bias is not regularized.
class LinearSvc : public Classifier {
 public:
  explicit LinearSvc(const json& p)
      : lambda_(p.at("lambda").get<double>()),
        epochs_(p.at("epochs").get<int>()),
        eta0_(p.at("eta0").get<double>()) {
    if (!(lambda_ > 0) || !(eta0_ > 0)) throw UsageError("svc: lambda and eta0 must be > 0");
  }

  void Fit(const Dataset& data, uint64_t seed) override {
    d_ = data.d;
    present_ = PresentClasses(data);
    w_.assign(kNumClasses * d_, 0.0);
    b_.fill(0.0);
    const double t0 = 1.0 / (lambda_ * eta0_);
    std::vector<size_t> order(data.n);
    for (int k = 0; k < kNumClasses; ++k) {
      if (!present_[k]) continue;
      Rng rng(DeriveSeed(seed, k));
      double* w = w_.data() + k * d_;
      double t = 0.0;
      for (int e = 0; e < epochs_; ++e) {
        for (size_t i = 0; i < data.n; ++i) order[i] = i;
        rng.Shuffle(&order);
        for (size_t i : order) {
          const double eta = 1.0 / (lambda_ * (t + t0));
          t += 1.0;
          const double* x = data.row(i);
          const double y = data.y[i] == k ? 1.0 : -1.0;
          const double margin = y * (Dot(w, x, d_) + b_[k]);
          const double shrink = 1.0 - eta * lambda_;
          for (size_t j = 0; j < d_; ++j) w[j] *= shrink;
          if (margin < 1.0) {
            for (size_t j = 0; j < d_; ++j) w[j] += eta * y * x[j];
            b_[k] += eta * y;
          }
        }
      }
    }
  }
  int Predict(const double* x) const override {
    std::array<double, kNumClasses> s{};
    for (int k = 0; k < kNumClasses; ++k) s[k] = b_[k] + Dot(w_.data() + k * d_, x, d_);
    return ArgMaxPresent(s, present_);
  }
  json State() const override {
    return {{"d", d_}, {"w", w_}, {"b", b_}, {"present", PresentToJson(present_)}};
  }
  void LoadState(const json& s) override {
    d_ = s.at("d").get<size_t>();
    w_ = s.at("w").get<std::vector<double>>();
    b_ = s.at("b").get<std::array<double, kNumClasses>>();
    present_ = PresentFromJson(s.at("present"));
    if (w_.size() != kNumClasses * d_) throw DataError("svc state: size mismatch");
  }

 private:
  double lambda_;
  int epochs_;
  double eta0_;
  size_t d_ = 0;
  std::vector<double> w_;
  std::array<double, kNumClasses> b_{};
  std::array<bool, kNumClasses> present_{};
};

// ---------------------------------------------------------------------------

// One hidden ReLU layer, softmax output, cross-entropy with L2, Adam.
class NeuralNetwork : public Classifier {
 public:
  explicit NeuralNetwork(const json& p)
      : hidden_(p.at("hidden").get<int>()),
        epochs_(p.at("epochs").get<int>()),
        batch_(p.at("batch_size").get<int>()),
        rate_(p.at("learning_rate").get<double>()),
        l2_(p.at("l2").get<double>()) {
    if (hidden_ < 1 || batch_ < 1) throw UsageError("nn: hidden and batch_size must be >= 1");
  }

  void Fit(const Dataset& data, uint64_t seed) override {
    d_ = data.d;
    present_ = PresentClasses(data);
    const size_t h = hidden_;
    Rng rng(seed);
    w1_.resize(h * d_);
    b1_.assign(h, 0.0);
    w2_.resize(kNumClasses * h);
    b2_.assign(kNumClasses, 0.0);
    const double s1 = std::sqrt(2.0 / static_cast<double>(std::max<size_t>(d_, 1)));
    for (double& v : w1_) v = s1 * rng.Normal();
    const double s2 = std::sqrt(1.0 / static_cast<double>(h));
    for (double& v : w2_) v = s2 * rng.Normal();

    // Parameters packed as [w1 | b1 | w2 | b2] for Adam.
    std::vector<double*> params;
    for (auto* v : {&w1_, &b1_, &w2_, &b2_}) {
      for (double& x : *v) params.push_back(&x);
    }
    const size_t np = params.size();
    std::vector<double> grad(np), m(np, 0.0), v(np, 0.0);
    const double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    double b1t = 1.0, b2t = 1.0;

    std::vector<size_t> order(data.n);
    for (size_t i = 0; i < data.n; ++i) order[i] = i;
    std::vector<double> act(h), dact(h);
    std::array<double, kNumClasses> z{};
    const size_t off_b1 = w1_.size(), off_w2 = off_b1 + h, off_b2 = off_w2 + w2_.size();

    for (int e = 0; e < epochs_; ++e) {
      rng.Shuffle(&order);
      for (size_t start = 0; start < data.n; start += batch_) {
        const size_t end = std::min(data.n, start + batch_);
        std::fill(grad.begin(), grad.end(), 0.0);
        for (size_t bi = start; bi < end; ++bi) {
          const size_t i = order[bi];
          const double* x = data.row(i);
          Forward(x, &act, &z);
          Softmax(&z);
          z[data.y[i]] -= 1.0;  // dL/dlogits
          std::fill(dact.begin(), dact.end(), 0.0);
          for (int k = 0; k < kNumClasses; ++k) {
            const double g = z[k];
            grad[off_b2 + k] += g;
            for (size_t u = 0; u < h; ++u) {
              grad[off_w2 + k * h + u] += g * act[u];
              dact[u] += g * w2_[k * h + u];
            }
          }
          for (size_t u = 0; u < h; ++u) {
            if (act[u] <= 0.0) continue;
            const double g = dact[u];
            grad[off_b1 + u] += g;
            double* gw = grad.data() + u * d_;
            for (size_t j = 0; j < d_; ++j) gw[j] += g * x[j];
          }
        }
        const double inv = 1.0 / static_cast<double>(end - start);
        b1t *= beta1;
        b2t *= beta2;
        for (size_t p = 0; p < np; ++p) {
          double g = grad[p] * inv;
          const bool weight = p < off_b1 || (p >= off_w2 && p < off_b2);
          if (weight) g += l2_ * *params[p];
          m[p] = beta1 * m[p] + (1 - beta1) * g;
          v[p] = beta2 * v[p] + (1 - beta2) * g * g;
          const double mh = m[p] / (1 - b1t), vh = v[p] / (1 - b2t);
          *params[p] -= rate_ * mh / (std::sqrt(vh) + eps);
        }
      }
    }
  }

  int Predict(const double* x) const override {
    std::vector<double> act(hidden_);
    std::array<double, kNumClasses> z{};
    Forward(x, &act, &z);
    return ArgMaxPresent(z, present_);
  }

  json State() const override {
    return {{"d", d_}, {"w1", w1_}, {"b1", b1_}, {"w2", w2_}, {"b2", b2_},
            {"present", PresentToJson(present_)}};
  }
  void LoadState(const json& s) override {
    d_ = s.at("d").get<size_t>();
    w1_ = s.at("w1").get<std::vector<double>>();
    b1_ = s.at("b1").get<std::vector<double>>();
    w2_ = s.at("w2").get<std::vector<double>>();
    b2_ = s.at("b2").get<std::vector<double>>();
    present_ = PresentFromJson(s.at("present"));
    const size_t h = b1_.size();
    if (static_cast<int>(h) != hidden_ || w1_.size() != h * d_ || w2_.size() != kNumClasses * h ||
        b2_.size() != kNumClasses) {
      throw DataError("nn state: size mismatch");
    }
  }

 private:
  void Forward(const double* x, std::vector<double>* act, std::array<double, kNumClasses>* z) const {
    const size_t h = hidden_;
    for (size_t u = 0; u < h; ++u) {
      (*act)[u] = std::max(0.0, b1_[u] + Dot(w1_.data() + u * d_, x, d_));
    }
    for (int k = 0; k < kNumClasses; ++k) (*z)[k] = b2_[k] + Dot(w2_.data() + k * h, act->data(), h);
  }

  int hidden_, epochs_, batch_;
  double rate_, l2_;
  size_t d_ = 0;
  std::vector<double> w1_, b1_, w2_, b2_;
  std::array<bool, kNumClasses> present_{};
};

}  // namespace

std::unique_ptr<Classifier> MakeKnn(const json& p) { return std::make_unique<Knn>(p); }
std::unique_ptr<Classifier> MakeLogisticRegression(const json& p) {
  return std::make_unique<LogisticRegression>(p);
}
std::unique_ptr<Classifier> MakeNaiveBayes(const json& p) { return std::make_unique<NaiveBayes>(p); }
std::unique_ptr<Classifier> MakeLinearSvc(const json& p) { return std::make_unique<LinearSvc>(p); }
std::unique_ptr<Classifier> MakeNeuralNetwork(const json& p) {
  return std::make_unique<NeuralNetwork>(p);
}

}  // namespace wikiqual::internal
