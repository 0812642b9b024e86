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

#include "wikiqual/pipeline.h"

#include <exception>
#include <fstream>
#include <set>

#include "wikiqual/errors.h"
#include "wikiqual/textfeat.h"
#include "wikiqual/wikitext.h"

namespace wikiqual {

Resources Resources::LoadFromDirectory(const std::string& dir) {
  return Resources{BrillTagger::LoadFromDirectory(dir + "/brill"),
                   FamiliarWordList::LoadFromFile(dir + "/dale_chall_familiar.txt")};
}

FeatureVector TextFeatures(const DocumentStructure& doc, const TaggedDocument& tagged,
                           const Resources& res) {
  FeatureVector fv = LengthFeatures(doc);
  fv.Append(StructureFeatures(doc));
  fv.Append(StyleScalarFeatures(tagged));
  fv.Append(ReadabilityFeatures(CountReadability(doc, res.familiar)));
  return fv;
}

std::vector<ArticleFeatures> ExtractCorpus(const Corpus& corpus, const Resources& res,
                                           const ExtractOptions& options, Execution exec,
                                           std::vector<std::string>* warnings) {
  const ProbReviewScores prob = ProbReview(corpus.histories, options.prob_review);
  if (!prob.converged && warnings) {
    warnings->push_back("ProbReview did not converge within " +
                        std::to_string(options.prob_review.max_iterations) +
                        " iterations; raise --prob-max-iter");
  }
  const std::vector<NodeMetrics> metrics = GraphMetrics(corpus.graph, options.pagerank, exec);

  const int n = static_cast<int>(corpus.articles.size());
  std::vector<ArticleFeatures> out(n);
  std::vector<std::exception_ptr> errors(n);
  const bool parallel = exec == Execution::kParallel;

#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (int i = 0; i < n; ++i) {
    try {
      const Article& article = corpus.articles[i];
      ArticleFeatures& a = out[i];
      a.id = article.id;
      a.label = article.label;
      const DocumentStructure doc = ParseWikitext(article.wikitext);
      const TaggedDocument tagged = PosTag(doc, res.tagger);
      a.anomaly_count = doc.anomaly_count;
      a.scalars = TextFeatures(doc, tagged, res);
      a.profile = ExtractTrigramProfile(tagged);

      ReviewFlags review_flags;
      a.scalars.Append(ReviewFeatures(corpus.histories.at(article.id), options.now, &review_flags));
      a.missing_snapshots = review_flags.missing_snapshots;
      a.scalars.Add("prob_review", FeatureGroup::kReview, prob.article_quality.at(article.id));

      a.scalars.Append(NetworkFeatures(metrics[*corpus.graph.find(article.id)]));
      if (auto f = corpus.flags.find(article.id); f != corpus.flags.end()) {
        a.corpus_flags = f->second;
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  // Report the first failure in corpus order, whatever the schedule.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

FeatureVector FullFeatureVector(const ArticleFeatures& a, const TrigramSelector& selector) {
  FeatureVector fv;
  bool inserted = false;
  for (const Feature& f : a.scalars) {
    if (!inserted && f.group == FeatureGroup::kReadability) {
      fv.Append(TrigramFeatures(a.profile, selector));
      inserted = true;
    }
    fv.Add(f.name, f.group, f.value);
  }
  if (!inserted) fv.Append(TrigramFeatures(a.profile, selector));
  return fv;
}

FeatureMatrix BuildFeatureMatrix(const std::vector<ArticleFeatures>& articles,
                                 const TrigramSelector& selector) {
  FeatureMatrix m;
  for (const ArticleFeatures& a : articles) m.AddRow(a.id, FullFeatureVector(a, selector), a.label);
  return m;
}

TrigramSelector FitSelectorOnLabelled(const std::vector<ArticleFeatures>& articles, int m, int n) {
  std::vector<const TrigramProfile*> docs;
  std::vector<QualityClass> labels;
  for (const ArticleFeatures& a : articles) {
    if (!a.label) continue;
    docs.push_back(&a.profile);
    labels.push_back(*a.label);
  }
  if (std::set<QualityClass>(labels.begin(), labels.end()).size() < 2) {
    throw DataError(
        "cannot fit the trigram selector: fewer than two quality classes are labelled "
        "(pass a previously fitted selector instead)");
  }
  return FitTrigramSelector(std::span<const TrigramProfile* const>(docs),
                            std::span<const QualityClass>(labels), m, n);
}

void WriteTrigramSidecar(const std::vector<ArticleFeatures>& articles, std::ostream& out) {
  for (const ArticleFeatures& a : articles) {
    nlohmann::json j = {{"id", a.id},
                        {"label", a.label ? nlohmann::json(std::string(ToString(*a.label)))
                                          : nlohmann::json(nullptr)},
                        {"profile", a.profile.ToJson()}};
    out << j.dump() << '\n';
  }
}

std::vector<TrigramRecord> ReadTrigramSidecar(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open trigram sidecar " + path);
  std::vector<TrigramRecord> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      TrigramRecord r;
      r.id = j.at("id").get<std::string>();
      if (!j.at("label").is_null()) {
        r.label = ParseQualityClass(j.at("label").get<std::string>());
        if (!r.label) throw RecordError(path, n, "label", "unknown quality class");
      }
      r.profile = TrigramProfile::FromJson(j.at("profile"));
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw RecordError(path, n, "record", e.what());
    }
  }
  return out;
}

}  // namespace wikiqual
