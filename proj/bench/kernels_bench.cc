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

// Serial reference kernels against their OpenMP counterparts.

#include <filesystem>
#include <string>

#include <benchmark/benchmark.h>

#include "wikiqual/ml.h"
#include "wikiqual/netfeat.h"
#include "wikiqual/pipeline.h"
#include "wikiqual/random.h"
#include "wikiqual/synthetic.h"

namespace wikiqual {
namespace {

Execution ModeOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

struct SyntheticCorpus {
  Corpus corpus;
  Timestamp now;
};

const SyntheticCorpus& Workload() {
  static const SyntheticCorpus w = [] {
    const std::string dir =
        (std::filesystem::temp_directory_path() / "wikiqual_bench_corpus").string();
    SyntheticOptions opt;
    opt.articles_per_class = 40;
    SyntheticCorpus out{LoadCorpus(WriteSyntheticCorpus(dir, opt)), opt.now};
    std::filesystem::remove_all(dir);
    return out;
  }();
  return w;
}

const Resources& Res() {
  static const Resources r = Resources::LoadFromDirectory(Resources::DefaultDirectory());
  return r;
}

LinkGraph RandomGraph(int n, int out_degree, uint64_t seed) {
  Rng rng(seed);
  LinkGraph g;
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < out_degree; ++k) {
      g.AddEdge("n" + std::to_string(v), "n" + std::to_string(rng.Below(n)));
    }
  }
  g.Finalize();
  return g;
}

void BM_ExtractCorpus(benchmark::State& state) {
  const SyntheticCorpus& w = Workload();
  ExtractOptions eo;
  eo.now = w.now;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractCorpus(w.corpus, Res(), eo, ModeOf(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.corpus.articles.size()));
}
BENCHMARK(BM_ExtractCorpus)->Arg(0)->Arg(1)->ArgName("parallel")->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_GraphMetrics(benchmark::State& state) {
  const LinkGraph g = RandomGraph(static_cast<int>(state.range(1)), 12, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GraphMetrics(g, {}, ModeOf(state)));
  }
  state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_GraphMetrics)
    ->ArgsProduct({{0, 1}, {2000, 20000}})
    ->ArgNames({"parallel", "nodes"})
    ->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_RandomForest(benchmark::State& state) {
  Rng rng(9);
  std::vector<std::string> cols;
  for (int c = 0; c < 40; ++c) cols.push_back("f" + std::to_string(c));
  FeatureMatrix x(cols);
  std::vector<double> row(cols.size());
  for (int r = 0; r < 1400; ++r) {
    const int label = r % 7;
    for (size_t c = 0; c < row.size(); ++c) row[c] = rng.Normal() + (c % 7 == static_cast<size_t>(label));
    x.AddRow("r" + std::to_string(r), row.data(), FromOrdinal(label));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Train(x, Algorithm::kRF, {{"n_trees", 64}}, 1, ModeOf(state)));
  }
}
BENCHMARK(BM_RandomForest)->Arg(0)->Arg(1)->ArgName("parallel")->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace wikiqual

BENCHMARK_MAIN();
