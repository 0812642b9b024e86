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

// Brute-force reference computations shared by the unit tests and the
// acceptance binary. Each one is written from the definition, independently
// of the library kernels, and favours obviousness over speed.

#ifndef WIKIQUAL_TESTS_ORACLES_H_
#define WIKIQUAL_TESTS_ORACLES_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wikiqual/corpus.h"
#include "wikiqual/feature_matrix.h"
#include "wikiqual/random.h"

namespace wikiqual::oracle {

// ---------------------------------------------------------------------------
// Readability: the eight indices of five bundled snippets, computed with a
// separate script from raw counts and the published formulas.

struct ReadabilitySnippet {
  const char* file;
  std::array<double, 8> expected;  // ARI, CLI, FRE, FKG, Fog, LIX, SMOG, Dale-Chall
};

inline const std::array<ReadabilitySnippet, 5>& ReadabilitySnippets() {
  static const std::array<ReadabilitySnippet, 5> kSnippets = {{
      {"snippet1.txt",
       {-5.222083333333, -4.445000000000, 116.821666666667, -1.710000000000, 2.133333333333,
        5.333333333333, 3.129100000000, 0.264533333333}},
      {"snippet2.txt",
       {25.489000000000, 33.572000000000, -74.035000000000, 26.070000000000, 29.333333333333,
        80.000000000000, 17.505862848430, 15.185500000000}},
      {"snippet3.txt",
       {8.243181818182, 12.506666666667, 49.770340909091, 8.366893939394, 9.360606060606,
        44.613636363636, 9.516144504307, 8.352063636364}},
      {"snippet4.txt",
       {6.963000000000, 10.444000000000, 75.425000000000, 5.223333333333, 5.333333333333,
        30.000000000000, 6.427355599556, 6.237833333333}},
      {"snippet5.txt",
       {16.991571428571, 23.321142857143, -17.171964285714, 17.828214285714, 21.785714285714,
        65.892857142857, 14.554592549558, 13.093357142857}},
  }};
  return kSnippets;
}

// ---------------------------------------------------------------------------
// Chi-square over character trigrams, from raw lower-case ASCII text.

struct Scored {
  std::string text;
  double chi2;
};

inline std::vector<Scored> BruteCharChiSquare(const std::vector<std::string>& docs,
                                              const std::vector<int>& labels) {
  std::map<int, int> class_size;
  for (int l : labels) ++class_size[l];
  std::set<std::string> vocab;
  std::vector<std::set<std::string>> present(docs.size());
  for (size_t d = 0; d < docs.size(); ++d) {
    for (size_t i = 0; i + 3 <= docs[d].size(); ++i) {
      present[d].insert(docs[d].substr(i, 3));
      vocab.insert(docs[d].substr(i, 3));
    }
  }
  const double n = static_cast<double>(docs.size());
  std::vector<Scored> out;
  for (const std::string& t : vocab) {
    // 2 x K table: row 0 present, row 1 absent.
    std::map<int, std::array<double, 2>> table;
    for (auto& [c, size] : class_size) table[c] = {0, 0};
    for (size_t d = 0; d < docs.size(); ++d) table[labels[d]][present[d].count(t) ? 0 : 1] += 1;
    std::array<double, 2> row{0, 0};
    for (auto& [c, cells] : table) {
      row[0] += cells[0];
      row[1] += cells[1];
    }
    double chi2 = 0;
    for (auto& [c, cells] : table) {
      const double col = cells[0] + cells[1];
      for (int r = 0; r < 2; ++r) {
        const double e = row[r] * col / n;
        if (e > 0) chi2 += (cells[r] - e) * (cells[r] - e) / e;
      }
    }
    out.push_back({t, chi2});
  }
  std::sort(out.begin(), out.end(), [](const Scored& a, const Scored& b) {
    return a.chi2 != b.chi2 ? a.chi2 > b.chi2 : a.text < b.text;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Graphs as dense adjacency matrices.

using Dense = std::vector<std::vector<int>>;  // a[i][j] = 1 for an edge i -> j

inline Dense RandomDigraph(int n, double p, uint64_t seed) {
  Rng rng(seed);
  Dense a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && rng.Uniform() < p) a[i][j] = 1;
    }
  }
  return a;
}

// Node ids are "n<i>"; nodes are added in index order so they keep it.
inline LinkGraph ToLinkGraph(const Dense& a) {
  LinkGraph g;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) g.AddNode("n" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a[i][j]) g.AddEdge("n" + std::to_string(i), "n" + std::to_string(j));
    }
  }
  g.Finalize();
  return g;
}

// Solves a x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> Solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (size_t i = n; i-- > 0;) {
    double s = b[i];
    for (size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

// PageRank as the linear system x = (1-d)/n + d (M x + dangling mass / n).
inline std::vector<double> DensePageRank(const Dense& adj, double d) {
  const size_t n = adj.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (size_t j = 0; j < n; ++j) {
    int out = 0;
    for (size_t i = 0; i < n; ++i) out += adj[j][i];
    for (size_t i = 0; i < n; ++i) {
      const double m = out == 0 ? 1.0 / static_cast<double>(n) : adj[j][i] / static_cast<double>(out);
      a[i][j] = (i == j ? 1.0 : 0.0) - d * m;
    }
  }
  return Solve(a, std::vector<double>(n, (1.0 - d) / static_cast<double>(n)));
}

struct BruteNode {
  double in = 0, out = 0;
  double in_in = 0, in_out = 0, out_in = 0, out_out = 0;
  double clustering = 0, reciprocity = 0;
};

inline std::vector<BruteNode> BruteNodeMetrics(const Dense& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<double> in(n, 0), out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[i] += adj[i][j];
      in[j] += adj[i][j];
    }
  }
  auto linked = [&](int a, int b) { return adj[a][b] || adj[b][a]; };
  std::vector<BruteNode> r(n);
  for (int v = 0; v < n; ++v) {
    BruteNode& m = r[v];
    m.in = in[v];
    m.out = out[v];
    double pred_in = 0, pred_n = 0, succ_out = 0, succ_n = 0;
    for (int u = 0; u < n; ++u) {
      if (adj[u][v]) pred_in += in[u], pred_n += 1;
      if (adj[v][u]) succ_out += out[u], succ_n += 1;
    }
    const double mean_in = pred_n > 0 ? pred_in / pred_n : 0;
    const double mean_out = succ_n > 0 ? succ_out / succ_n : 0;
    m.in_in = mean_in > 0 ? in[v] / mean_in : 0;
    m.out_in = mean_in > 0 ? out[v] / mean_in : 0;
    m.in_out = mean_out > 0 ? in[v] / mean_out : 0;
    m.out_out = mean_out > 0 ? out[v] / mean_out : 0;
    m.reciprocity = out[v] > 0 ? in[v] / out[v] : 0;
    // Triple loop over neighbour pairs of the undirected view.
    double k = 0, links = 0;
    for (int a = 0; a < n; ++a) {
      if (a == v || !linked(v, a)) continue;
      k += 1;
      for (int b = a + 1; b < n; ++b) {
        if (b != v && linked(v, b) && linked(a, b)) links += 1;
      }
    }
    m.clustering = k >= 2 ? 2 * links / (k * (k - 1)) : 0;
  }
  return r;
}

// ---------------------------------------------------------------------------
// ProbReview as dense power iteration on the article-user incidence matrix:
// q <- normmax(B a), a <- normmax(B^T q), starting from all ones.

struct DenseProbReviewResult {
  std::vector<double> quality, authority;
};

inline DenseProbReviewResult DenseProbReview(const Dense& b, int iterations = 100000) {
  const size_t na = b.size(), nu = b.empty() ? 0 : b[0].size();
  std::vector<double> q(na, 1.0), a(nu, 1.0);
  auto normmax = [](std::vector<double>* v) {
    double mx = 0;
    for (double x : *v) mx = std::max(mx, x);
    if (mx > 0) {
      for (double& x : *v) x /= mx;
    }
  };
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> q2(na, 0.0), a2(nu, 0.0);
    for (size_t i = 0; i < na; ++i) {
      for (size_t u = 0; u < nu; ++u) q2[i] += b[i][u] * a[u];
    }
    normmax(&q2);
    for (size_t u = 0; u < nu; ++u) {
      for (size_t i = 0; i < na; ++i) a2[u] += b[i][u] * q2[i];
    }
    normmax(&a2);
    double change = 0;
    for (size_t i = 0; i < na; ++i) change = std::max(change, std::abs(q2[i] - q[i]));
    for (size_t u = 0; u < nu; ++u) change = std::max(change, std::abs(a2[u] - a[u]));
    q = q2;
    a = a2;
    if (change < 1e-15) break;
  }
  return {q, a};
}

// The 5-article, 6-user review fixture: article i was edited by user u
// when kReviewIncidence[i][u] is 1.
inline const Dense& ReviewIncidence() {
  static const Dense kB = {
      {1, 1, 0, 0, 0, 1},
      {1, 0, 1, 0, 0, 0},
      {0, 1, 1, 1, 0, 0},
      {0, 0, 0, 1, 1, 0},
      {1, 0, 0, 0, 1, 1},
  };
  return kB;
}

// Histories realising an incidence matrix, with one or two edits per pair.
inline std::map<std::string, RevisionHistory> HistoriesFromIncidence(const Dense& b) {
  std::map<std::string, RevisionHistory> h;
  const Timestamp t0 = ParseRfc3339("2018-01-01T00:00:00Z");
  int rev = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    RevisionHistory& hist = h["art" + std::to_string(i)];
    hist.article_id = "art" + std::to_string(i);
    for (size_t u = 0; u < b[i].size(); ++u) {
      if (!b[i][u]) continue;
      for (size_t k = 0; k <= (i + u) % 2; ++k) {
        Revision r;
        r.revision_id = std::to_string(rev);
        r.timestamp = t0 + std::chrono::hours(rev++);
        r.user_key = "user" + std::to_string(u);
        r.content_hash = "h" + std::to_string(rev);
        hist.revisions.push_back(r);
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Synthetic classification data over the seven quality classes.

inline std::vector<std::string> DimensionNames(int d) {
  std::vector<std::string> names;
  for (int k = 0; k < d; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

// One well-separated Gaussian blob per class (centres 10 apart, unit noise).
inline FeatureMatrix Blobs(int per_class, int d, uint64_t seed) {
  Rng rng(seed);
  FeatureMatrix m(DimensionNames(d));
  std::vector<double> row(d);
  for (int c = 0; c < 7; ++c) {
    for (int i = 0; i < per_class; ++i) {
      for (int k = 0; k < d; ++k) row[k] = (k == c % d ? 10.0 * (c + 1) : 5.0 * (c % 3)) + rng.Normal();
      m.AddRow("b" + std::to_string(c) + "_" + std::to_string(i), row.data(), FromOrdinal(c));
    }
  }
  return m;
}

// Two classes, label = sign(x0) xor sign(x1).
// Uniform on [-1, 1]^2, labelled by quadrant parity. With `mirrored` each draw
// is reflected into all four quadrants, removing any linear trend a finite
// sample could carry; `n` is then rounded up to a multiple of 4.
inline FeatureMatrix Xor(int n, uint64_t seed, bool mirrored = false) {
  Rng rng(seed);
  FeatureMatrix m(DimensionNames(2));
  int id = 0;
  auto add = [&](double x0, double x1) {
    double x[2] = {x0, x1};
    const bool cls = (x0 > 0) != (x1 > 0);
    m.AddRow("x" + std::to_string(id++), x, cls ? QualityClass::FA : QualityClass::Stub);
  };
  if (!mirrored) {
    for (int i = 0; i < n; ++i) {
      const double x0 = rng.Uniform() * 2 - 1;
      add(x0, rng.Uniform() * 2 - 1);
    }
    return m;
  }
  for (int i = 0; i < (n + 3) / 4; ++i) {
    const double a = rng.Uniform(), b = rng.Uniform();
    add(a, b);
    add(a, -b);
    add(-a, b);
    add(-a, -b);
  }
  return m;
}

// Balanced labels, features independent of them.
inline FeatureMatrix Noise(int per_class, int d, uint64_t seed) {
  Rng rng(seed);
  FeatureMatrix m(DimensionNames(d));
  std::vector<double> row(d);
  for (int c = 0; c < 7; ++c) {
    for (int i = 0; i < per_class; ++i) {
      for (double& v : row) v = rng.Normal();
      m.AddRow("r" + std::to_string(c) + "_" + std::to_string(i), row.data(), FromOrdinal(c));
    }
  }
  return m;
}

}  // namespace wikiqual::oracle

#endif  // WIKIQUAL_TESTS_ORACLES_H_
