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

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "test_util.h"
#include "wikiqual/feature_matrix.h"
#include "wikiqual/registry.h"

using namespace wikiqual;
using testing::ReadFile;
using testing::TempDir;
using testing::TestDataPath;

namespace {

const std::string kCli = WIKIQUAL_CLI;
const std::string kSynth = WIKIQUAL_SYNTH;

// Runs a shell command and returns its exit status.
int Run(const std::string& cmd) {
  const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string FixtureArgs() {
  const std::string d = TestDataPath("cli/");
  return " --articles " + d + "articles.jsonl --revisions " + d + "revisions.jsonl --graph " + d +
         "graph.tsv --now 2018-06-01T00:00:00Z";
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("extract writes one row per article with every registry column") {
  TempDir dir;
  REQUIRE(Run(kCli + " --quiet extract" + FixtureArgs() + " --out-dir " + dir.path()) == 0);
  const FeatureMatrix x = ReadCsvFile(dir.file("features.csv"));
  CHECK(x.rows() == 3);
  CHECK(x.cols() == FeatureRegistry(kDefaultCharTrigrams, kDefaultPosTrigrams).size());
  CHECK(x.ids() == std::vector<std::string>{"alpha", "beta", "gamma"});
  CHECK(*x.labels()[0] == QualityClass::FA);
  CHECK(x.at(0, *x.ColumnIndex("citation_count")) == 3);
  CHECK(x.at(0, *x.ColumnIndex("revert_count")) == 1);
  CHECK(x.at(0, *x.ColumnIndex("translation_count")) == 12);
  CHECK(Lines(ReadFile(dir.file("trigrams.jsonl"))).size() == 3);
  for (const char* f : {"selector.json", "flags.jsonl", "run_config.json"}) {
    CHECK(std::filesystem::exists(dir.file(f)));
  }
}

TEST_CASE("reruns are byte-identical, also from the recorded configuration") {
  TempDir a, b, c;
  REQUIRE(Run(kCli + " --quiet extract" + FixtureArgs() + " --out-dir " + a.path()) == 0);
  REQUIRE(Run(kCli + " --quiet --serial extract" + FixtureArgs() + " --out-dir " + b.path()) == 0);
  CHECK(ReadFile(a.file("features.csv")) == ReadFile(b.file("features.csv")));
  CHECK(ReadFile(a.file("trigrams.jsonl")) == ReadFile(b.file("trigrams.jsonl")));
  REQUIRE(Run(kCli + " --config " + a.file("run_config.json") + " extract --out-dir " + c.path()) ==
          0);
  CHECK(ReadFile(a.file("features.csv")) == ReadFile(c.file("features.csv")));
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(Run(kCli) == 1);
  CHECK(Run(kCli + " no-such-command") == 1);
  CHECK(Run(kCli + " train --features x.csv") == 1);  // --out missing
  CHECK(Run(kCli + " extract --articles " + dir.file("absent.jsonl") + " --revisions " +
            dir.file("absent.jsonl") + " --graph " + dir.file("absent.tsv") +
            " --now 2018-06-01T00:00:00Z --out-dir " + dir.path()) == 2);
  testing::WriteFile(dir.file("bad.jsonl"), "{\"id\": \"x\"\n");
  const std::string d = TestDataPath("cli/");
  CHECK(Run(kCli + " extract --articles " + dir.file("bad.jsonl") + " --revisions " + d +
            "revisions.jsonl --graph " + d + "graph.tsv --now 2018-06-01T00:00:00Z --out-dir " +
            dir.path()) == 2);
  // --now is mandatory for extraction.
  CHECK(Run(kCli + " extract" + FixtureArgs().substr(0, FixtureArgs().find(" --now")) +
            " --out-dir " + dir.path()) == 1);
  CHECK(Run(kCli + " experiment --features " + dir.file("absent.csv") + " --out-dir " +
            dir.path()) == 2);
}

TEST_CASE("train, evaluate and predict") {
  TempDir dir;
  REQUIRE(Run(kCli + " --quiet extract" + FixtureArgs() + " --out-dir " + dir.path()) == 0);
  const std::string features = dir.file("features.csv");
  REQUIRE(Run(kCli + " train --features " + features + " --algorithm DT --out " +
              dir.file("dt.json")) == 0);
  REQUIRE(Run(kCli + " evaluate --model " + dir.file("dt.json") + " --features " + features +
              " --out " + dir.file("metrics.json")) == 0);
  const auto metrics = nlohmann::json::parse(ReadFile(dir.file("metrics.json")));
  CHECK(metrics.at("accuracy") == 1.0);
  REQUIRE(std::system((kCli + " predict --model " + dir.file("dt.json") + " --features " +
                       features + " > " + dir.file("pred.tsv"))
                          .c_str()) == 0);
  CHECK(Lines(ReadFile(dir.file("pred.tsv"))) ==
        std::vector<std::string>{"alpha\tFA", "beta\tC", "gamma\tStub"});

  // A header-only matrix predicts nothing and succeeds.
  testing::WriteFile(dir.file("empty.csv"), Lines(ReadFile(features))[0] + "\n");
  CHECK(Run(kCli + " predict --model " + dir.file("dt.json") + " --features " +
            dir.file("empty.csv")) == 0);

  CHECK(Run(kCli + " train --features " + features + " --algorithm KNN --param k=two --out " +
            dir.file("knn.json")) == 1);
}

TEST_CASE("experiment writes four tables with a row per algorithm") {
  TempDir corpus, out, tables;
  REQUIRE(Run(kSynth + " --out-dir " + corpus.path() + " --per-class 3 --seed 2") == 0);
  const std::string args = " --articles " + corpus.file("articles.jsonl") + " --revisions " +
                           corpus.file("revisions.jsonl") + " --graph " +
                           corpus.file("graph.tsv") + " --now 2018-06-01T00:00:00Z";
  REQUIRE(Run(kCli + " --quiet extract" + args + " --out-dir " + out.path()) == 0);
  REQUIRE(Run(kCli + " --quiet experiment --features " + out.file("features.csv") +
              " --folds 3 --param RF.n_trees=10 --param GB.n_rounds=10 --param NN.epochs=5"
              " --out-dir " + tables.path()) == 0);
  for (const char* name : {"exp1_accuracy", "exp1_mse", "exp2_accuracy", "exp2_mse"}) {
    INFO(name);
    const auto rows = Lines(ReadFile(tables.file(std::string(name) + ".csv")));
    CHECK(rows.size() == 9);  // header plus eight algorithms
    CHECK(std::filesystem::exists(tables.file(std::string(name) + ".txt")));
  }
}

TEST_CASE("graph metrics") {
  TempDir dir;
  REQUIRE(Run(kCli + " graph-metrics --graph " + TestDataPath("cli/graph.tsv") + " --out " +
              dir.file("m.tsv")) == 0);
  CHECK(Lines(ReadFile(dir.file("m.tsv"))).size() == 4);
}
