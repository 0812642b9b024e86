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

// Command-line driver: extract, fit-selector, train, evaluate, experiment,
// predict and graph-metrics.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "config_json.h"
#include "json.hpp"
#include "wikiqual/corpus.h"
#include "wikiqual/errors.h"
#include "wikiqual/execution.h"
#include "wikiqual/experiment.h"
#include "wikiqual/ml.h"
#include "wikiqual/netfeat.h"
#include "wikiqual/pipeline.h"
#include "wikiqual/registry.h"

namespace wq = wikiqual;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct Global {
  std::string data_dir = WIKIQUAL_DATA_DIR;
  int jobs = 0;
  bool serial = false;
  bool quiet = false;
  CLI::App* app = nullptr;

  wq::Execution exec() const { return serial ? wq::Execution::kSerial : wq::Execution::kParallel; }
  void Warn(const std::string& msg) const {
    if (!quiet) std::cerr << "wikiqual: warning: " << msg << '\n';
  }
  void Info(const std::string& msg) const {
    if (!quiet) std::cerr << "wikiqual: " << msg << '\n';
  }
  void WriteRunConfig(const std::string& dir) const {
    std::ofstream out(dir + "/run_config.json", std::ios::binary);
    if (!out) throw wq::DataError("cannot write " + dir + "/run_config.json");
    json j = wq::ConfigJson::ToJson(app, true);
    j["_registry_version"] = wq::kRegistryVersion;
    out << j.dump(2) << '\n';
  }
};

struct CorpusArgs {
  wq::CorpusPaths paths;
  std::string now;
  int prob_max_iter = 100;
  double prob_tol = 1e-8;
  double damping = 0.85;
  double pagerank_tol = 1e-10;
  int pagerank_max_iter = 200;

  void Add(CLI::App* cmd, bool articles_required) {
    auto* a = cmd->add_option("--articles", paths.articles, "Articles (JSON Lines)");
    if (articles_required) a->required();
    cmd->add_option("--revisions", paths.revisions, "Revision metadata (JSON Lines)");
    cmd->add_option("--graph", paths.graph, "Link graph (TSV: citing, cited)");
    cmd->add_option("--discussions", paths.discussions, "Discussion counts (JSON Lines)");
    cmd->add_option("--snapshots", paths.snapshots, "Current and 3-month-old texts (JSON Lines)");
    cmd->add_option("--red-links", paths.red_links, "Red-link counts (JSON Lines)");
    cmd->add_option("--now", now, "Reference time for review features (RFC 3339)");
    cmd->add_option("--prob-max-iter", prob_max_iter, "ProbReview iteration limit")
        ->capture_default_str();
    cmd->add_option("--prob-tol", prob_tol, "ProbReview tolerance")->capture_default_str();
    cmd->add_option("--damping", damping, "PageRank damping")->capture_default_str();
    cmd->add_option("--pagerank-tol", pagerank_tol, "PageRank L1 tolerance")->capture_default_str();
    cmd->add_option("--pagerank-max-iter", pagerank_max_iter, "PageRank iteration limit")
        ->capture_default_str();
  }

  wq::ExtractOptions Options() const {
    if (now.empty()) throw wq::UsageError("--now is required (reference time, RFC 3339)");
    wq::ExtractOptions o;
    try {
      o.now = wq::ParseRfc3339(now);
    } catch (const std::invalid_argument& e) {
      throw wq::UsageError(std::string("--now: ") + e.what());
    }
    o.prob_review = {prob_max_iter, prob_tol};
    o.pagerank = {damping, pagerank_tol, pagerank_max_iter};
    if (!(damping > 0.0 && damping < 1.0)) throw wq::UsageError("--damping must be in (0, 1)");
    return o;
  }
};

std::vector<wq::ArticleFeatures> RunExtraction(const Global& g, const CorpusArgs& c) {
  const wq::ExtractOptions options = c.Options();
  if (c.paths.revisions.empty()) throw wq::UsageError("--revisions is required");
  wq::Corpus corpus = wq::LoadCorpus(c.paths);
  for (const std::string& w : corpus.warnings) g.Warn(w);
  const wq::Resources res = wq::Resources::LoadFromDirectory(g.data_dir);
  std::vector<std::string> warnings;
  auto articles = wq::ExtractCorpus(corpus, res, options, g.exec(), &warnings);
  for (const std::string& w : warnings) g.Warn(w);
  return articles;
}

json ParseValue(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    return text;
  }
}

// "key=value" into `out`.
void AddParam(const std::string& spec, json* out) {
  const size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw wq::UsageError("expected key=value, got '" + spec + "'");
  (*out)[spec.substr(0, eq)] = ParseValue(spec.substr(eq + 1));
}

std::set<wq::ExperimentGroup> ParseGroups(const std::vector<std::string>& names) {
  std::set<wq::ExperimentGroup> groups;
  for (const std::string& n : names) groups.insert(wq::ParseExperimentGroup(n));
  return groups;
}

std::map<std::string, wq::TrigramProfile> LoadProfiles(const std::string& path) {
  std::map<std::string, wq::TrigramProfile> profiles;
  for (auto& r : wq::ReadTrigramSidecar(path)) profiles[r.id] = std::move(r.profile);
  return profiles;
}

void EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw wq::DataError("cannot create directory " + dir + ": " + ec.message());
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wq::DataError("cannot write " + path);
  return out;
}

wq::TrigramSelector LoadSelector(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wq::DataError("cannot open selector " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw wq::DataError("malformed selector " + path + ": " + e.what());
  }
  return wq::TrigramSelector::FromJson(j);
}

void WriteJsonFile(const std::string& path, const json& j) { OpenOut(path) << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wikipedia article quality: feature extraction and classification"};
  app.config_formatter(std::make_shared<wq::ConfigJson>());
  app.set_config("--config", "", "JSON configuration file (command-line flags take precedence)");
  app.require_subcommand(1);
  Global g;
  g.app = &app;
  app.add_option("--data-dir", g.data_dir, "Bundled linguistic resources")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (0: all cores)")->capture_default_str();
  app.add_flag("--serial", g.serial, "Use the serial reference kernels");
  app.add_flag("--quiet", g.quiet, "Suppress warnings");

  // extract
  CorpusArgs extract_corpus;
  std::string extract_out, extract_selector;
  int m = wq::kDefaultCharTrigrams, n = wq::kDefaultPosTrigrams;
  auto* extract = app.add_subcommand("extract", "Extract the feature matrix of a corpus");
  extract_corpus.Add(extract, true);
  extract->add_option("--out-dir", extract_out, "Output directory")->required();
  extract->add_option("--selector", extract_selector, "Use a fitted trigram selector");
  extract->add_option("--m", m, "Character trigram count")->capture_default_str();
  extract->add_option("--n", n, "POS trigram count")->capture_default_str();

  // fit-selector
  std::string fs_trigrams, fs_out;
  auto* fit_selector = app.add_subcommand("fit-selector", "Fit a trigram selector on a sidecar");
  fit_selector->add_option("--trigrams", fs_trigrams, "Trigram sidecar from extract")->required();
  fit_selector->add_option("--m", m, "Character trigram count")->capture_default_str();
  fit_selector->add_option("--n", n, "POS trigram count")->capture_default_str();
  fit_selector->add_option("--out", fs_out, "Selector JSON")->required();

  // train
  std::string train_features, train_algo = "GB", train_out;
  std::vector<std::string> train_params, train_groups;
  uint64_t train_seed = wq::kDefaultSeed;
  auto* train = app.add_subcommand("train", "Train a classifier");
  train->add_option("--features", train_features, "Feature matrix CSV")->required();
  train->add_option("--algorithm", train_algo, "DT, KNN, LR, NB, RF, SVC, NN or GB")
      ->capture_default_str();
  train->add_option("--param", train_params, "Hyperparameter override key=value");
  train->add_option("--groups", train_groups, "Restrict to groups (TF, RF, NF)")->delimiter(',');
  train->add_option("--seed", train_seed, "Random seed")->capture_default_str();
  train->add_option("--out", train_out, "Model JSON")->required();

  // evaluate
  std::string eval_model, eval_features, eval_out;
  auto* evaluate = app.add_subcommand("evaluate", "Score a model on a labelled matrix");
  evaluate->add_option("--model", eval_model, "Model JSON")->required();
  evaluate->add_option("--features", eval_features, "Feature matrix CSV")->required();
  evaluate->add_option("--out", eval_out, "Metrics JSON");

  // experiment
  std::string exp_features, exp_trigrams, exp_out;
  std::vector<std::string> exp_algos, exp_params, exp_which = {"1", "2"};
  int folds = wq::kDefaultFolds;
  uint64_t exp_seed = wq::kDefaultSeed;
  bool audit = false;
  auto* experiment = app.add_subcommand("experiment", "Cross-validated experiment tables");
  experiment->add_option("--features", exp_features, "Feature matrix CSV")->required();
  experiment->add_option("--trigrams", exp_trigrams,
                         "Trigram sidecar; refits the selector inside each training fold");
  experiment->add_option("--algorithms", exp_algos, "Subset of algorithms")->delimiter(',');
  experiment->add_option("--param", exp_params, "Override ALGO.key=value");
  experiment->add_option("--experiments", exp_which, "Which experiments (1, 2)")
      ->delimiter(',')
      ->capture_default_str();
  experiment->add_option("--folds", folds, "Cross-validation folds")->capture_default_str();
  experiment->add_option("--seed", exp_seed, "Random seed")->capture_default_str();
  experiment->add_flag("--audit-leakage", audit, "Check that no test row reaches fitted transforms");
  experiment->add_option("--out-dir", exp_out, "Output directory")->required();

  // predict
  std::string pred_model, pred_features, pred_selector, pred_out;
  CorpusArgs pred_corpus;
  auto* predict = app.add_subcommand("predict", "Predict quality classes");
  predict->add_option("--model", pred_model, "Model JSON")->required();
  predict->add_option("--features", pred_features, "Feature matrix CSV");
  pred_corpus.Add(predict, false);
  predict->add_option("--selector", pred_selector, "Trigram selector used at training time");
  predict->add_option("--out", pred_out, "Predictions (JSON Lines)");

  // graph-metrics
  CorpusArgs gm_corpus;
  std::string gm_out = "-";
  auto* graph_metrics = app.add_subcommand("graph-metrics", "Per-node network metrics as TSV");
  graph_metrics->add_option("--graph", gm_corpus.paths.graph, "Link graph TSV")->required();
  graph_metrics->add_option("--articles", gm_corpus.paths.articles, "Articles (for translations)");
  graph_metrics->add_option("--red-links", gm_corpus.paths.red_links, "Red-link counts");
  graph_metrics->add_option("--damping", gm_corpus.damping, "PageRank damping")->capture_default_str();
  graph_metrics->add_option("--pagerank-tol", gm_corpus.pagerank_tol, "PageRank L1 tolerance")
      ->capture_default_str();
  graph_metrics->add_option("--pagerank-max-iter", gm_corpus.pagerank_max_iter,
                            "PageRank iteration limit")
      ->capture_default_str();
  graph_metrics->add_option("--out", gm_out, "Output TSV ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    wq::SetThreadCount(g.jobs);

    if (extract->parsed()) {
      if (m < 1 || n < 1) throw wq::UsageError("--m and --n must be positive");
      EnsureDir(extract_out);
      const auto articles = RunExtraction(g, extract_corpus);
      const wq::TrigramSelector selector = extract_selector.empty()
                                               ? wq::FitSelectorOnLabelled(articles, m, n)
                                               : LoadSelector(extract_selector);
      for (const std::string& w : selector.warnings()) g.Warn(w);
      const wq::FeatureMatrix x = wq::BuildFeatureMatrix(articles, selector);
      {
        std::ofstream out = OpenOut(extract_out + "/features.csv");
        wq::WriteCsv(x, out);
      }
      {
        std::ofstream out = OpenOut(extract_out + "/trigrams.jsonl");
        wq::WriteTrigramSidecar(articles, out);
      }
      WriteJsonFile(extract_out + "/selector.json", selector.ToJson());
      std::ofstream flags = OpenOut(extract_out + "/flags.jsonl");
      int flagged = 0;
      for (const auto& a : articles) {
        const bool any = a.anomaly_count > 0 || a.corpus_flags.missing_history ||
                         a.corpus_flags.missing_discussion_count ||
                         a.corpus_flags.missing_graph_node || a.missing_snapshots;
        flagged += any;
        flags << json{{"id", a.id},
                      {"markup_anomalies", a.anomaly_count},
                      {"missing_history", a.corpus_flags.missing_history},
                      {"missing_discussion_count", a.corpus_flags.missing_discussion_count},
                      {"missing_graph_node", a.corpus_flags.missing_graph_node},
                      {"missing_snapshots", a.missing_snapshots}}
                     .dump()
              << '\n';
      }
      if (flagged > 0) g.Warn(std::to_string(flagged) + " article(s) flagged; see flags.jsonl");
      g.WriteRunConfig(extract_out);
      g.Info("extracted " + std::to_string(x.rows()) + " articles x " + std::to_string(x.cols()) +
             " features into " + extract_out);
    } else if (fit_selector->parsed()) {
      if (m < 1 || n < 1) throw wq::UsageError("--m and --n must be positive");
      std::vector<wq::TrigramProfile> docs;
      std::vector<wq::QualityClass> labels;
      for (auto& r : wq::ReadTrigramSidecar(fs_trigrams)) {
        if (!r.label) continue;
        docs.push_back(std::move(r.profile));
        labels.push_back(*r.label);
      }
      const wq::TrigramSelector sel = wq::FitTrigramSelector(docs, labels, m, n);
      for (const std::string& w : sel.warnings()) g.Warn(w);
      WriteJsonFile(fs_out, sel.ToJson());
    } else if (train->parsed()) {
      wq::FeatureMatrix x = wq::ReadCsvFile(train_features);
      if (!train_groups.empty()) x = x.SelectColumns(x.ColumnsOf(ParseGroups(train_groups)));
      json overrides = json::object();
      for (const std::string& p : train_params) AddParam(p, &overrides);
      const wq::TrainedModel model =
          wq::Train(x, wq::ParseAlgorithm(train_algo), overrides, train_seed, g.exec());
      wq::SaveModel(model, train_out);
      g.Info("trained " + std::string(wq::ToString(model.algorithm)) + " on " +
             std::to_string(x.rows()) + " rows");
    } else if (evaluate->parsed()) {
      const wq::TrainedModel model = wq::LoadModel(eval_model);
      wq::FeatureMatrix x = wq::ReadCsvFile(eval_features);
      if (!x.all_labeled()) throw wq::DataError("evaluate: every row needs a label");
      std::vector<size_t> cols;
      for (const std::string& c : model.columns) {
        auto idx = x.ColumnIndex(c);
        if (!idx) throw wq::DataError("feature matrix lacks model column '" + c + "'; re-extract");
        cols.push_back(*idx);
      }
      x = x.SelectColumns(cols);
      std::vector<wq::QualityClass> truth;
      for (const auto& l : x.labels()) truth.push_back(*l);
      const wq::Metrics metrics = wq::Evaluate(truth, wq::Predict(model, x));
      const json j = {{"rows", x.rows()}, {"accuracy", metrics.accuracy}, {"mse", metrics.mse}};
      std::cout << j.dump(2) << '\n';
      if (!eval_out.empty()) WriteJsonFile(eval_out, j);
    } else if (experiment->parsed()) {
      EnsureDir(exp_out);
      const wq::FeatureMatrix x = wq::ReadCsvFile(exp_features);
      std::vector<wq::Algorithm> algos;
      if (exp_algos.empty()) {
        algos.assign(wq::kAllAlgorithms.begin(), wq::kAllAlgorithms.end());
      } else {
        for (const std::string& a : exp_algos) algos.push_back(wq::ParseAlgorithm(a));
      }
      std::map<wq::Algorithm, json> params;
      for (const std::string& p : exp_params) {
        const size_t dot = p.find('.');
        if (dot == std::string::npos) throw wq::UsageError("expected ALGO.key=value, got '" + p + "'");
        AddParam(p.substr(dot + 1), &params[wq::ParseAlgorithm(p.substr(0, dot))]);
      }
      for (auto& [a, p] : params) wq::ResolveParams(a, p);  // validate early
      std::map<std::string, wq::TrigramProfile> profiles;
      wq::CvOptions cv;
      cv.folds = folds;
      cv.seed = exp_seed;
      cv.exec = g.exec();
      cv.audit_leakage = audit;
      if (!exp_trigrams.empty()) {
        profiles = LoadProfiles(exp_trigrams);
        cv.profiles = &profiles;
      } else {
        g.Warn("no --trigrams sidecar: trigram columns keep the selector fitted at extraction");
      }
      using G = wq::ExperimentGroup;
      for (const std::string& which : exp_which) {
        std::vector<std::set<G>> groupings;
        std::vector<std::string> names;
        std::string prefix;
        if (which == "1") {
          groupings = {{G::kText, G::kReview, G::kNetwork}};
          names = {"All"};
          prefix = "exp1";
        } else if (which == "2") {
          groupings = {{G::kText}, {G::kReview}, {G::kNetwork}};
          names = {"TF", "RF", "NF"};
          prefix = "exp2";
        } else {
          throw wq::UsageError("--experiments accepts 1 and 2");
        }
        g.Info("running experiment " + which);
        const wq::ExperimentTable t = wq::RunExperiment(x, groupings, names, algos, params, cv);
        for (auto [metric, suffix, title] :
             {std::tuple{wq::Metric::kAccuracy, "accuracy", "Accuracy (higher is better)"},
              std::tuple{wq::Metric::kMse, "mse", "MSE (lower is better)"}}) {
          const std::string base = exp_out + "/" + prefix + "_" + suffix;
          std::ofstream csv = OpenOut(base + ".csv");
          wq::WriteTableCsv(t, metric, csv);
          std::ofstream txt = OpenOut(base + ".txt");
          wq::WriteTableText(t, metric, "Experiment " + which + " - " + title, txt);
          if (!g.quiet) wq::WriteTableText(t, metric, "Experiment " + which + " - " + title, std::cout);
        }
      }
      g.WriteRunConfig(exp_out);
    } else if (predict->parsed()) {
      const wq::TrainedModel model = wq::LoadModel(pred_model);
      wq::FeatureMatrix x;
      if (!pred_features.empty()) {
        x = wq::ReadCsvFile(pred_features);
      } else if (!pred_corpus.paths.articles.empty()) {
        if (pred_selector.empty()) throw wq::UsageError("--selector is required with --articles");
        x = wq::BuildFeatureMatrix(RunExtraction(g, pred_corpus), LoadSelector(pred_selector));
      } else {
        throw wq::UsageError("predict needs --features or --articles");
      }
      if (x.rows() > 0) {
        std::vector<size_t> cols;
        for (const std::string& c : model.columns) {
          auto idx = x.ColumnIndex(c);
          if (!idx) {
            throw wq::DataError("input lacks model column '" + c +
                                "'; re-extract features with the training selector");
          }
          cols.push_back(*idx);
        }
        x = x.SelectColumns(cols);
      }
      const std::vector<wq::QualityClass> pred = wq::Predict(model, x);
      std::ofstream out;
      if (!pred_out.empty()) out = OpenOut(pred_out);
      for (size_t r = 0; r < pred.size(); ++r) {
        std::cout << x.ids()[r] << '\t' << wq::ToString(pred[r]) << '\n';
        if (out.is_open()) {
          out << json{{"id", x.ids()[r]}, {"predicted", std::string(wq::ToString(pred[r]))}}.dump()
              << '\n';
        }
      }
    } else if (graph_metrics->parsed()) {
      wq::Corpus corpus;
      if (!gm_corpus.paths.articles.empty()) {
        corpus = wq::LoadCorpus(gm_corpus.paths);
        for (const std::string& w : corpus.warnings) g.Warn(w);
      } else {
        wq::CorpusPaths p;
        p.articles.clear();
        // Graph-only mode: read edges (and red links) without articles.
        std::ifstream in(gm_corpus.paths.graph);
        if (!in) throw wq::DataError("cannot open " + gm_corpus.paths.graph);
        std::string line;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.empty() || line[0] == '#') continue;
          const size_t tab = line.find('\t');
          if (tab == std::string::npos) throw wq::DataError(gm_corpus.paths.graph + ": missing TAB");
          corpus.graph.AddEdge(line.substr(0, tab), line.substr(tab + 1));
        }
        corpus.graph.Finalize();
      }
      const wq::PageRankOptions pr{gm_corpus.damping, gm_corpus.pagerank_tol,
                                   gm_corpus.pagerank_max_iter};
      const auto metrics = wq::GraphMetrics(corpus.graph, pr, g.exec());
      if (gm_out == "-") {
        wq::WriteMetricsTsv(corpus.graph, metrics, std::cout);
      } else {
        std::ofstream out = OpenOut(gm_out);
        wq::WriteMetricsTsv(corpus.graph, metrics, out);
      }
    }
  } catch (const wq::UsageError& e) {
    std::cerr << "wikiqual: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wq::DataError& e) {
    std::cerr << "wikiqual: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "wikiqual: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
