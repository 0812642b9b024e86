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

#include <sstream>

#include "oracles.h"
#include "wikiqual/netfeat.h"

using namespace wikiqual;

namespace {

LinkGraph Graph(const std::vector<std::pair<std::string, std::string>>& edges) {
  LinkGraph g;
  for (const auto& [a, b] : edges) g.AddEdge(a, b);
  g.Finalize();
  return g;
}

}  // namespace

TEST_CASE("three-node cycle has uniform PageRank") {
  const LinkGraph g = Graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const PageRankResult r = PageRank(g);
  CHECK(r.converged);
  for (double s : r.scores) CHECK(s == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("two nodes and one edge") {
  const LinkGraph g = Graph({{"A", "B"}});
  const PageRankResult r = PageRank(g, {0.85, 1e-14, 1000});
  // B is dangling and spreads its mass over both nodes:
  //   PR(A) = 0.075 + 0.425 PR(B),  PR(A) + PR(B) = 1  =>  PR(A) = 0.5 / 1.425.
  CHECK(r.scores[*g.find("A")] == doctest::Approx(0.5 / 1.425).epsilon(1e-10));
  CHECK(r.scores[*g.find("B")] == doctest::Approx(0.925 / 1.425).epsilon(1e-10));
  const auto exact = oracle::DensePageRank({{0, 1}, {0, 0}}, 0.85);
  CHECK(exact[0] == doctest::Approx(0.5 / 1.425).epsilon(1e-12));
}

TEST_CASE("PageRank equals the dense linear solve on random graphs") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const auto adj = oracle::RandomDigraph(50, 0.06, seed);
    const LinkGraph g = oracle::ToLinkGraph(adj);
    const PageRankResult r = PageRank(g, {0.85, 1e-13, 1000});
    const auto exact = oracle::DensePageRank(adj, 0.85);
    double sum = 0;
    for (int v = 0; v < g.size(); ++v) {
      CHECK(std::abs(r.scores[v] - exact[v]) < 1e-8);
      sum += r.scores[v];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("serial and parallel kernels agree bitwise") {
  const LinkGraph g = oracle::ToLinkGraph(oracle::RandomDigraph(300, 0.02, 9));
  const auto s = GraphMetrics(g, {}, Execution::kSerial);
  const auto p = GraphMetrics(g, {}, Execution::kParallel);
  std::ostringstream a, b;
  WriteMetricsTsv(g, s, a);
  WriteMetricsTsv(g, p, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("an added in-edge never lowers the target's PageRank") {
  for (uint64_t seed = 20; seed < 30; ++seed) {
    auto adj = oracle::RandomDigraph(25, 0.1, seed);
    Rng rng(seed);
    int u, v;
    do {
      u = static_cast<int>(rng.Below(25));
      v = static_cast<int>(rng.Below(25));
    } while (u == v || adj[u][v]);
    const double before = PageRank(oracle::ToLinkGraph(adj), {0.85, 1e-13, 1000}).scores[v];
    adj[u][v] = 1;
    const double after = PageRank(oracle::ToLinkGraph(adj), {0.85, 1e-13, 1000}).scores[v];
    CHECK(after >= before - 1e-12);
  }
}

TEST_CASE("clustering is invariant under relabelling") {
  const auto adj = oracle::RandomDigraph(30, 0.15, 3);
  const auto original = GraphMetrics(oracle::ToLinkGraph(adj));
  // Reverse node order.
  const int n = static_cast<int>(adj.size());
  oracle::Dense rev(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rev[n - 1 - i][n - 1 - j] = adj[i][j];
  }
  const auto relabelled = GraphMetrics(oracle::ToLinkGraph(rev));
  for (int v = 0; v < n; ++v) {
    CHECK(original[v].local_clustering == relabelled[n - 1 - v].local_clustering);
    CHECK(original[v].local_clustering >= 0.0);
    CHECK(original[v].local_clustering <= 1.0);
  }
}

TEST_CASE("complete digraph on four nodes") {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const char* a : {"a", "b", "c", "d"}) {
    for (const char* b : {"a", "b", "c", "d"}) {
      if (std::string(a) != b) edges.emplace_back(a, b);
    }
  }
  for (const NodeMetrics& m : GraphMetrics(Graph(edges))) {
    CHECK(m.local_clustering == 1.0);
    CHECK(m.reciprocity == 1.0);
    CHECK(m.assortativity_in_in == 1.0);
    CHECK(m.assortativity_in_out == 1.0);
    CHECK(m.assortativity_out_in == 1.0);
    CHECK(m.assortativity_out_out == 1.0);
    CHECK(m.pagerank == doctest::Approx(0.25));
  }
}

TEST_CASE("sink node has the zero reciprocity sentinel") {
  const LinkGraph g = Graph({{"a", "c"}, {"b", "c"}});
  const NodeMetrics m = GraphMetrics(g)[*g.find("c")];
  CHECK(m.in_degree == 2);
  CHECK(m.out_degree == 0);
  CHECK(m.reciprocity == 0.0);
  CHECK(m.assortativity_in_out == 0.0);
}

TEST_CASE("all metrics match the triple-loop recomputation on random digraphs") {
  for (uint64_t seed = 10; seed < 14; ++seed) {
    const auto adj = oracle::RandomDigraph(30, 0.12, seed);
    const LinkGraph g = oracle::ToLinkGraph(adj);
    const auto metrics = GraphMetrics(g, {0.85, 1e-13, 1000});
    const auto brute = oracle::BruteNodeMetrics(adj);
    for (int v = 0; v < g.size(); ++v) {
      const NodeMetrics& m = metrics[v];
      const oracle::BruteNode& b = brute[v];
      CHECK(m.in_degree == b.in);
      CHECK(m.out_degree == b.out);
      CHECK(std::abs(m.assortativity_in_in - b.in_in) < 1e-12);
      CHECK(std::abs(m.assortativity_in_out - b.in_out) < 1e-12);
      CHECK(std::abs(m.assortativity_out_in - b.out_in) < 1e-12);
      CHECK(std::abs(m.assortativity_out_out - b.out_out) < 1e-12);
      CHECK(std::abs(m.local_clustering - b.clustering) < 1e-12);
      CHECK(std::abs(m.reciprocity - b.reciprocity) < 1e-12);
    }
  }
}

TEST_CASE("link and translation counts come from the node annotations") {
  LinkGraph g = Graph({{"a", "b"}, {"a", "c"}});
  g.set_red_links(*g.find("a"), 3);
  g.set_translations(*g.find("a"), 12);
  const NodeMetrics m = GraphMetrics(g)[*g.find("a")];
  CHECK(m.link_count == 5);
  CHECK(m.translation_count == 12);
  const FeatureVector fv = NetworkFeatures(m);
  CHECK(fv.size() == 11);
  CHECK(fv.at("link_count") == 5);
  CHECK(fv.at("translation_count") == 12);
}

TEST_CASE("self loops and duplicate edges are dropped") {
  LinkGraph g;
  CHECK(g.AddEdge("a", "b"));
  CHECK_FALSE(g.AddEdge("a", "b"));
  CHECK_FALSE(g.AddEdge("a", "a"));
  g.Finalize();
  CHECK(g.edge_count() == 1);
  CHECK(g.dropped_duplicates() == 1);
  CHECK(g.dropped_self_loops() == 1);
}

TEST_CASE("empty graph") {
  LinkGraph g;
  g.Finalize();
  CHECK(PageRank(g).scores.empty());
  CHECK(GraphMetrics(g).empty());
}
