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

#include "wikiqual/netfeat.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wikiqual {

PageRankResult PageRank(const LinkGraph& g, const PageRankOptions& options, Execution exec) {
  PageRankResult result;
  const int n = g.size();
  if (n == 0) return result;
  const double d = options.damping;
  const double base = (1.0 - d) / n;
  std::vector<double> pr(n, 1.0 / n), next(n, 0.0), share(n, 0.0);
  const bool parallel = exec == Execution::kParallel;

  for (int it = 1; it <= options.max_iter; ++it) {
    // Sums stay serial so both modes add in the same order.
    double dangling = 0.0;
    for (int v = 0; v < n; ++v) {
      const size_t out = g.successors(v).size();
      if (out == 0) {
        dangling += pr[v];
        share[v] = 0.0;
      } else {
        share[v] = pr[v] / static_cast<double>(out);
      }
    }
    const double teleport = base + d * dangling / n;
#pragma omp parallel for schedule(static) if (parallel)
    for (int v = 0; v < n; ++v) {
      double s = 0.0;
      for (int u : g.predecessors(v)) s += share[u];
      next[v] = teleport + d * s;
    }
    double change = 0.0;
    for (int v = 0; v < n; ++v) change += std::abs(next[v] - pr[v]);
    pr.swap(next);
    result.iterations = it;
    if (change < options.tol) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(pr);
  return result;
}

namespace {

std::vector<std::vector<int>> UndirectedNeighbours(const LinkGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (int v = 0; v < g.size(); ++v) {
    const auto& out = g.successors(v);
    const auto& in = g.predecessors(v);
    std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(adj[v]));
  }
  return adj;
}

size_t IntersectionSize(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

double MeanDegree(const LinkGraph& g, const std::vector<int>& nodes, bool in) {
  if (nodes.empty()) return 0.0;
  double s = 0.0;
  for (int u : nodes) {
    s += static_cast<double>(in ? g.predecessors(u).size() : g.successors(u).size());
  }
  return s / static_cast<double>(nodes.size());
}

}  // namespace

std::vector<NodeMetrics> GraphMetrics(const LinkGraph& g, const PageRankOptions& options,
                                      Execution exec) {
  const int n = g.size();
  const PageRankResult pr = PageRank(g, options, exec);
  const auto undirected = UndirectedNeighbours(g);
  std::vector<NodeMetrics> metrics(n);
  const bool parallel = exec == Execution::kParallel;

#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (int v = 0; v < n; ++v) {
    NodeMetrics& m = metrics[v];
    const auto& succ = g.successors(v);
    const auto& pred = g.predecessors(v);
    m.pagerank = pr.scores[v];
    m.in_degree = static_cast<int64_t>(pred.size());
    m.out_degree = static_cast<int64_t>(succ.size());
    const double in = static_cast<double>(m.in_degree);
    const double out = static_cast<double>(m.out_degree);
    // Y = in: mean in-degree of predecessors; Y = out: mean out-degree of successors.
    const double mean_in = MeanDegree(g, pred, true);
    const double mean_out = MeanDegree(g, succ, false);
    m.assortativity_in_in = SafeRatio(in, mean_in);
    m.assortativity_in_out = SafeRatio(in, mean_out);
    m.assortativity_out_in = SafeRatio(out, mean_in);
    m.assortativity_out_out = SafeRatio(out, mean_out);

    const auto& nb = undirected[v];
    const size_t k = nb.size();
    if (k >= 2) {
      size_t twice_links = 0;
      for (int u : nb) twice_links += IntersectionSize(undirected[u], nb);
      m.local_clustering =
          static_cast<double>(twice_links) / (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    m.reciprocity = SafeRatio(in, out);
    m.link_count = m.out_degree + g.red_links(v);
    m.translation_count = g.translations(v);
  }
  return metrics;
}

FeatureVector NetworkFeatures(const NodeMetrics& m) {
  constexpr FeatureGroup g = FeatureGroup::kNetwork;
  FeatureVector fv;
  fv.Add("pagerank", g, m.pagerank);
  fv.Add("in_degree", g, static_cast<double>(m.in_degree));
  fv.Add("out_degree", g, static_cast<double>(m.out_degree));
  fv.Add("assortativity_in_in", g, m.assortativity_in_in);
  fv.Add("assortativity_in_out", g, m.assortativity_in_out);
  fv.Add("assortativity_out_in", g, m.assortativity_out_in);
  fv.Add("assortativity_out_out", g, m.assortativity_out_out);
  fv.Add("local_clustering", g, m.local_clustering);
  fv.Add("reciprocity", g, m.reciprocity);
  fv.Add("link_count", g, static_cast<double>(m.link_count));
  fv.Add("translation_count", g, static_cast<double>(m.translation_count));
  return fv;
}

void WriteMetricsTsv(const LinkGraph& g, const std::vector<NodeMetrics>& metrics,
                     std::ostream& out) {
  out << "id\tpagerank\tin_degree\tout_degree\tassortativity_in_in\tassortativity_in_out"
         "\tassortativity_out_in\tassortativity_out_out\tlocal_clustering\treciprocity"
         "\tlink_count\ttranslation_count\n";
  char buf[32];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (int v = 0; v < g.size(); ++v) {
    const NodeMetrics& m = metrics[v];
    out << g.id(v) << '\t' << num(m.pagerank) << '\t' << m.in_degree << '\t' << m.out_degree
        << '\t' << num(m.assortativity_in_in) << '\t' << num(m.assortativity_in_out) << '\t'
        << num(m.assortativity_out_in) << '\t' << num(m.assortativity_out_out) << '\t'
        << num(m.local_clustering) << '\t' << num(m.reciprocity) << '\t' << m.link_count << '\t'
        << m.translation_count << '\n';
  }
}

}  // namespace wikiqual
