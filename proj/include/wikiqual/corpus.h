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

#ifndef WIKIQUAL_CORPUS_H_
#define WIKIQUAL_CORPUS_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wikiqual/quality_class.h"

namespace wikiqual {

using Timestamp = std::chrono::sys_seconds;

// RFC 3339 date-time ("2018-08-01T12:00:00Z", offsets and fractional
// seconds accepted; fractions are truncated). Throws std::invalid_argument.
Timestamp ParseRfc3339(std::string_view text);
std::string FormatRfc3339(Timestamp t);

struct Article {
  std::string id;
  std::string title;
  std::string wikitext;
  std::optional<QualityClass> label;
  int64_t language_version_count = 0;
  int64_t raw_link_count = 0;
};

enum class UserKind { kRegistered, kAnonymous };

struct Revision {
  std::string revision_id;
  Timestamp timestamp{};
  std::string user_key;
  UserKind user_kind = UserKind::kRegistered;
  std::string content_hash;
  int64_t size_bytes = 0;
};

struct RevisionHistory {
  std::string article_id;
  std::vector<Revision> revisions;  // sorted by timestamp, stable
  int64_t discussion_count = 0;
  std::optional<std::string> snapshot_text_now;
  std::optional<std::string> snapshot_text_3mo;
};

// Simple directed graph over article ids: no self loops, no parallel edges.
class LinkGraph {
 public:
  // Returns the node index, inserting the id if needed.
  int AddNode(const std::string& id);
  // Returns false (and records the drop) for self loops and duplicates.
  bool AddEdge(const std::string& citing, const std::string& cited);
  // Sorts adjacency lists; call once after the last AddEdge.
  void Finalize();

  int size() const { return static_cast<int>(ids_.size()); }
  int64_t edge_count() const { return edge_count_; }
  const std::string& id(int node) const { return ids_[node]; }
  std::optional<int> find(const std::string& id) const;

  const std::vector<int>& successors(int node) const { return out_[node]; }
  const std::vector<int>& predecessors(int node) const { return in_[node]; }
  bool has_edge(int from, int to) const;

  int64_t red_links(int node) const { return red_links_[node]; }
  int64_t translations(int node) const { return translations_[node]; }
  void set_red_links(int node, int64_t n) { red_links_[node] = n; }
  void set_translations(int node, int64_t n) { translations_[node] = n; }

  int64_t dropped_self_loops() const { return dropped_self_loops_; }
  int64_t dropped_duplicates() const { return dropped_duplicates_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int64_t> red_links_;
  std::vector<int64_t> translations_;
  int64_t edge_count_ = 0;
  int64_t dropped_self_loops_ = 0;
  int64_t dropped_duplicates_ = 0;
};

struct CorpusPaths {
  std::string articles;
  std::string revisions;
  std::string graph;
  std::string discussions;  // optional sidecars; empty = absent
  std::string snapshots;
  std::string red_links;
};

struct CorpusFlags {
  bool missing_history = false;
  bool missing_discussion_count = false;
  bool missing_graph_node = false;
};

struct Corpus {
  std::vector<Article> articles;
  std::map<std::string, RevisionHistory> histories;
  LinkGraph graph;
  std::map<std::string, CorpusFlags> flags;  // keyed by article id
  std::vector<std::string> warnings;
};

// Reads one JSON Lines articles file. Throws RecordError for malformed
// records and DataError for duplicate ids.
std::vector<Article> LoadArticles(const std::string& path);

// Loads all stores and cross-checks them by article id. Articles without a
// revision history or a graph node are flagged (and get an empty history /
// isolated node) rather than dropped.
Corpus LoadCorpus(const CorpusPaths& paths);

}  // namespace wikiqual

#endif  // WIKIQUAL_CORPUS_H_
