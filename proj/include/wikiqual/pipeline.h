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

#ifndef WIKIQUAL_PIPELINE_H_
#define WIKIQUAL_PIPELINE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wikiqual/corpus.h"
#include "wikiqual/execution.h"
#include "wikiqual/feature_matrix.h"
#include "wikiqual/feature_vector.h"
#include "wikiqual/netfeat.h"
#include "wikiqual/pos_tagger.h"
#include "wikiqual/readability.h"
#include "wikiqual/reviewfeat.h"
#include "wikiqual/stylefeat.h"

namespace wikiqual {

// Bundled linguistic data. Immutable and shared across threads.
struct Resources {
  BrillTagger tagger;
  FamiliarWordList familiar;

  // Expects brill/ and dale_chall_familiar.txt under `dir`.
  static Resources LoadFromDirectory(const std::string& dir);
  static const char* DefaultDirectory() { return WIKIQUAL_DATA_DIR; }
};

struct ExtractOptions {
  Timestamp now{};
  ProbReviewOptions prob_review;
  PageRankOptions pagerank;
};

struct ArticleFeatures {
  std::string id;
  std::optional<QualityClass> label;
  FeatureVector scalars;  // every scalar registry feature, registry order
  TrigramProfile profile;
  int64_t anomaly_count = 0;
  CorpusFlags corpus_flags;
  bool missing_snapshots = false;
};

// Text, style and readability features of one article.
FeatureVector TextFeatures(const DocumentStructure& doc, const TaggedDocument& tagged,
                           const Resources& res);

// Features of every article, in corpus order. ProbReview and graph metrics
// are computed once over the corpus; the per-article stage runs in parallel
// unless `exec` is kSerial. Both modes give identical results. Corpus-level
// conditions, such as ProbReview stopping at its iteration limit, are
// appended to `warnings` when given.
std::vector<ArticleFeatures> ExtractCorpus(const Corpus& corpus, const Resources& res,
                                           const ExtractOptions& options,
                                           Execution exec = Execution::kParallel,
                                           std::vector<std::string>* warnings = nullptr);

// Scalar features plus the selector's trigram columns, in registry order.
FeatureVector FullFeatureVector(const ArticleFeatures& a, const TrigramSelector& selector);

FeatureMatrix BuildFeatureMatrix(const std::vector<ArticleFeatures>& articles,
                                 const TrigramSelector& selector);

// Fits the selector on the labelled articles. Throws DataError when fewer
// than two classes are labelled.
TrigramSelector FitSelectorOnLabelled(const std::vector<ArticleFeatures>& articles, int m, int n);

// Trigram sidecar: one JSON object per line with "id", "label" (string or
// null) and "profile".
struct TrigramRecord {
  std::string id;
  std::optional<QualityClass> label;
  TrigramProfile profile;
};

void WriteTrigramSidecar(const std::vector<ArticleFeatures>& articles, std::ostream& out);
std::vector<TrigramRecord> ReadTrigramSidecar(const std::string& path);

}  // namespace wikiqual

#endif  // WIKIQUAL_PIPELINE_H_
