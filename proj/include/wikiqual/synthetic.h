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

#ifndef WIKIQUAL_SYNTHETIC_H_
#define WIKIQUAL_SYNTHETIC_H_

#include <cstdint>
#include <string>

#include "wikiqual/corpus.h"

namespace wikiqual {

// Seeded generator of a labelled corpus whose size, structure, editing
// activity and linking grow with the quality class. Used by tests, the
// benchmark and demos; it is not a model of real Wikipedia text.
struct SyntheticOptions {
  int articles_per_class = 10;
  uint64_t seed = 7;
  Timestamp now = ParseRfc3339("2018-06-01T00:00:00Z");
};

std::string SyntheticWikitext(int quality_ordinal, uint64_t seed);

// Writes articles.jsonl, revisions.jsonl, graph.tsv, discussions.jsonl,
// snapshots.jsonl and red_links.jsonl into `dir` (created if missing).
CorpusPaths WriteSyntheticCorpus(const std::string& dir, const SyntheticOptions& options);

}  // namespace wikiqual

#endif  // WIKIQUAL_SYNTHETIC_H_
