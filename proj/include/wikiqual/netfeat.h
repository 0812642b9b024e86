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

#ifndef WIKIQUAL_NETFEAT_H_
#define WIKIQUAL_NETFEAT_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "wikiqual/corpus.h"
#include "wikiqual/execution.h"
#include "wikiqual/feature_vector.h"

namespace wikiqual {

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-10;  // on the L1 change between iterations
  int max_iter = 200;
};

struct PageRankResult {
  std::vector<double> scores;  // indexed by node
  int iterations = 0;
  bool converged = false;
};

// Power iteration with uniform teleport; dangling nodes spread their mass
// uniformly. Scores sum to 1.
PageRankResult PageRank(const LinkGraph& g, const PageRankOptions& options = {},
                        Execution exec = Execution::kParallel);

struct NodeMetrics {
  double pagerank = 0.0;
  int64_t in_degree = 0;
  int64_t out_degree = 0;
  // assortativity_X_Y: X-degree of the node over the mean Y-degree of its
  // neighbours, where the neighbours are the successors when Y is "out"
  // and the predecessors when Y is "in".
  double assortativity_in_in = 0.0;
  double assortativity_in_out = 0.0;
  double assortativity_out_in = 0.0;
  double assortativity_out_out = 0.0;
  double local_clustering = 0.0;  // on the undirected view
  double reciprocity = 0.0;       // in_degree / out_degree
  int64_t link_count = 0;         // out_degree + red links
  int64_t translation_count = 0;
};

std::vector<NodeMetrics> GraphMetrics(const LinkGraph& g, const PageRankOptions& options = {},
                                      Execution exec = Execution::kParallel);

// The 11 network features, in registry order.
FeatureVector NetworkFeatures(const NodeMetrics& m);

// One header line, then one line per node in node order.
void WriteMetricsTsv(const LinkGraph& g, const std::vector<NodeMetrics>& metrics,
                     std::ostream& out);

}  // namespace wikiqual

#endif  // WIKIQUAL_NETFEAT_H_
