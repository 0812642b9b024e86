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

// Writes a small synthetic corpus with all six input files.

#include <iostream>

#include "CLI11.hpp"
#include "wikiqual/errors.h"
#include "wikiqual/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic corpus for smoke tests and benchmarks"};
  std::string out_dir, now = "2018-06-01T00:00:00Z";
  wikiqual::SyntheticOptions options;
  app.add_option("--out-dir", out_dir, "Output directory")->required();
  app.add_option("--per-class", options.articles_per_class, "Articles per quality class")
      ->capture_default_str();
  app.add_option("--seed", options.seed, "Random seed")->capture_default_str();
  app.add_option("--now", now, "Reference time")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  try {
    options.now = wikiqual::ParseRfc3339(now);
    wikiqual::WriteSyntheticCorpus(out_dir, options);
  } catch (const std::exception& e) {
    std::cerr << "wikiqual_synth: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
