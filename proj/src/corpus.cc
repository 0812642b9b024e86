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

#include "wikiqual/corpus.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "wikiqual/errors.h"
#include "wikiqual/text_util.h"

namespace wikiqual {

using json = nlohmann::json;

namespace {

int ParseDigits(std::string_view s, size_t pos, size_t count) {
  if (pos + count > s.size()) throw std::invalid_argument("truncated timestamp");
  int v = 0;
  for (size_t i = pos; i < pos + count; ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("expected digit in timestamp");
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

void Expect(std::string_view s, size_t pos, char c) {
  if (pos >= s.size() || (s[pos] != c && !(c == 'T' && (s[pos] == 't' || s[pos] == ' ')))) {
    throw std::invalid_argument(std::string("expected '") + c + "' in timestamp");
  }
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

// Iterates non-blank JSON Lines records, parsing each into an object.
template <typename Fn>
void ForEachRecord(const std::string& path, Fn&& fn) {
  std::ifstream in = OpenInput(path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw RecordError(path, line_no, "<record>", std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) {
      throw RecordError(path, line_no, "<record>", "expected a JSON object");
    }
    fn(record, line_no);
  }
}

const json& Field(const json& record, const char* name, const std::string& path, int line) {
  auto it = record.find(name);
  if (it == record.end() || it->is_null()) throw RecordError(path, line, name, "missing");
  return *it;
}

std::string StringField(const json& record, const char* name, const std::string& path,
                        int line) {
  const json& v = Field(record, name, path, line);
  if (!v.is_string()) throw RecordError(path, line, name, "expected a string");
  return v.get<std::string>();
}

int64_t CountField(const json& record, const char* name, const std::string& path, int line) {
  const json& v = Field(record, name, path, line);
  if (!v.is_number_integer() || v.get<int64_t>() < 0) {
    throw RecordError(path, line, name, "expected a nonnegative integer");
  }
  return v.get<int64_t>();
}

int64_t OptionalCount(const json& record, const char* name, const std::string& path, int line) {
  if (!record.contains(name) || record[name].is_null()) return 0;
  return CountField(record, name, path, line);
}

}  // namespace

Timestamp ParseRfc3339(std::string_view text) {
  using namespace std::chrono;
  std::string_view s = Trim(text);
  const int y = ParseDigits(s, 0, 4);
  Expect(s, 4, '-');
  const int mo = ParseDigits(s, 5, 2);
  Expect(s, 7, '-');
  const int d = ParseDigits(s, 8, 2);
  Expect(s, 10, 'T');
  const int hh = ParseDigits(s, 11, 2);
  Expect(s, 13, ':');
  const int mm = ParseDigits(s, 14, 2);
  Expect(s, 16, ':');
  const int ss = ParseDigits(s, 17, 2);
  size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  }
  int offset_minutes = 0;
  if (pos < s.size() && (s[pos] == 'Z' || s[pos] == 'z')) {
    ++pos;
  } else if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    const int sign = s[pos] == '+' ? 1 : -1;
    const int oh = ParseDigits(s, pos + 1, 2);
    Expect(s, pos + 3, ':');
    const int om = ParseDigits(s, pos + 4, 2);
    offset_minutes = sign * (oh * 60 + om);
    pos += 6;
  } else {
    throw std::invalid_argument("missing timezone designator");
  }
  if (pos != s.size()) throw std::invalid_argument("trailing characters in timestamp");
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || hh > 23 || mm > 59 || ss > 60) {
    throw std::invalid_argument("timestamp out of range");
  }
  return sys_days{ymd} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_minutes};
}

std::string FormatRfc3339(Timestamp t) {
  using namespace std::chrono;
  const sys_days day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss<seconds> tod{t - day_point};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()));
  return buf;
}

int LinkGraph::AddNode(const std::string& id) {
  auto [it, inserted] = index_.emplace(id, static_cast<int>(ids_.size()));
  if (inserted) {
    ids_.push_back(id);
    out_.emplace_back();
    in_.emplace_back();
    red_links_.push_back(0);
    translations_.push_back(0);
  }
  return it->second;
}

bool LinkGraph::AddEdge(const std::string& citing, const std::string& cited) {
  if (citing == cited) {
    AddNode(citing);
    ++dropped_self_loops_;
    return false;
  }
  const int from = AddNode(citing);
  const int to = AddNode(cited);
  auto& succ = out_[from];
  if (std::find(succ.begin(), succ.end(), to) != succ.end()) {
    ++dropped_duplicates_;
    return false;
  }
  succ.push_back(to);
  in_[to].push_back(from);
  ++edge_count_;
  return true;
}

void LinkGraph::Finalize() {
  for (auto& v : out_) std::sort(v.begin(), v.end());
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

std::optional<int> LinkGraph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool LinkGraph::has_edge(int from, int to) const {
  const auto& succ = out_[from];
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<Article> LoadArticles(const std::string& path) {
  std::vector<Article> articles;
  std::set<std::string> seen;
  ForEachRecord(path, [&](const json& r, int line) {
    Article a;
    a.id = StringField(r, "id", path, line);
    if (a.id.empty()) throw RecordError(path, line, "id", "empty id");
    a.title = r.contains("title") && r["title"].is_string() ? r["title"].get<std::string>() : "";
    a.wikitext = StringField(r, "wikitext", path, line);
    if (r.contains("label") && !r["label"].is_null()) {
      if (!r["label"].is_string()) throw RecordError(path, line, "label", "expected a string");
      auto label = ParseQualityClass(r["label"].get<std::string>());
      if (!label) {
        throw RecordError(path, line, "label",
                          "unknown quality class '" + r["label"].get<std::string>() + "'");
      }
      a.label = label;
    }
    a.language_version_count = OptionalCount(r, "translations", path, line);
    a.raw_link_count = OptionalCount(r, "link_count", path, line);
    if (!seen.insert(a.id).second) {
      throw DataError(path + ":" + std::to_string(line) + ": duplicate article id '" + a.id + "'");
    }
    articles.push_back(std::move(a));
  });
  return articles;
}

namespace {

void LoadRevisions(const std::string& path, std::map<std::string, RevisionHistory>* out) {
  ForEachRecord(path, [&](const json& r, int line) {
    const std::string article_id = StringField(r, "article_id", path, line);
    Revision rev;
    rev.revision_id = StringField(r, "revision_id", path, line);
    const std::string ts = StringField(r, "timestamp", path, line);
    try {
      rev.timestamp = ParseRfc3339(ts);
    } catch (const std::invalid_argument& e) {
      throw RecordError(path, line, "timestamp", e.what());
    }
    rev.user_key = StringField(r, "user", path, line);
    const json& anon = Field(r, "anonymous", path, line);
    if (!anon.is_boolean()) throw RecordError(path, line, "anonymous", "expected a boolean");
    rev.user_kind = anon.get<bool>() ? UserKind::kAnonymous : UserKind::kRegistered;
    rev.content_hash = StringField(r, "sha1", path, line);
    rev.size_bytes = CountField(r, "size", path, line);
    RevisionHistory& h = (*out)[article_id];
    h.article_id = article_id;
    h.revisions.push_back(std::move(rev));
  });
  for (auto& [id, h] : *out) {
    std::stable_sort(h.revisions.begin(), h.revisions.end(),
                     [](const Revision& a, const Revision& b) { return a.timestamp < b.timestamp; });
  }
}

void LoadGraph(const std::string& path, LinkGraph* g) {
  std::ifstream in = OpenInput(path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) throw RecordError(path, line_no, "cited_id", "missing TAB separator");
    const std::string citing(Trim(std::string_view(line).substr(0, tab)));
    const std::string cited(Trim(std::string_view(line).substr(tab + 1)));
    if (citing.empty()) throw RecordError(path, line_no, "citing_id", "empty id");
    if (cited.empty() || cited.find('\t') != std::string::npos) {
      throw RecordError(path, line_no, "cited_id", "expected exactly one id");
    }
    g->AddEdge(citing, cited);
  }
}

}  // namespace

Corpus LoadCorpus(const CorpusPaths& paths) {
  Corpus corpus;
  corpus.articles = LoadArticles(paths.articles);
  LoadRevisions(paths.revisions, &corpus.histories);

  std::map<std::string, int64_t> discussions;
  if (!paths.discussions.empty()) {
    ForEachRecord(paths.discussions, [&](const json& r, int line) {
      discussions[StringField(r, "article_id", paths.discussions, line)] =
          CountField(r, "discussion_count", paths.discussions, line);
    });
  }
  if (!paths.snapshots.empty()) {
    ForEachRecord(paths.snapshots, [&](const json& r, int line) {
      const std::string id = StringField(r, "article_id", paths.snapshots, line);
      RevisionHistory& h = corpus.histories[id];
      h.article_id = id;
      h.snapshot_text_now = StringField(r, "text_now", paths.snapshots, line);
      h.snapshot_text_3mo = StringField(r, "text_3mo", paths.snapshots, line);
    });
  }

  if (!paths.graph.empty()) LoadGraph(paths.graph, &corpus.graph);
  std::set<int> red_link_nodes;
  if (!paths.red_links.empty()) {
    ForEachRecord(paths.red_links, [&](const json& r, int line) {
      const int node = corpus.graph.AddNode(StringField(r, "id", paths.red_links, line));
      corpus.graph.set_red_links(node, CountField(r, "red_links", paths.red_links, line));
      red_link_nodes.insert(node);
    });
  }

  std::set<std::string> article_ids;
  for (const Article& a : corpus.articles) {
    article_ids.insert(a.id);
    CorpusFlags& flags = corpus.flags[a.id];
    auto h = corpus.histories.find(a.id);
    if (h == corpus.histories.end() || h->second.revisions.empty()) {
      flags.missing_history = true;
      corpus.warnings.push_back("article '" + a.id + "' has no revision history");
      RevisionHistory& empty = corpus.histories[a.id];
      empty.article_id = a.id;
    }
    auto d = discussions.find(a.id);
    if (d == discussions.end()) {
      flags.missing_discussion_count = !paths.discussions.empty();
    } else {
      corpus.histories[a.id].discussion_count = d->second;
    }
    std::optional<int> node = corpus.graph.find(a.id);
    if (!node) {
      flags.missing_graph_node = true;
      corpus.warnings.push_back("article '" + a.id + "' is not a node of the link graph");
      node = corpus.graph.AddNode(a.id);
    }
    corpus.graph.set_translations(*node, a.language_version_count);
  }
  for (auto it = corpus.histories.begin(); it != corpus.histories.end();) {
    if (article_ids.count(it->first)) {
      ++it;
      continue;
    }
    corpus.warnings.push_back("ignoring revision history for unknown article '" + it->first + "'");
    it = corpus.histories.erase(it);
  }
  if (corpus.graph.dropped_self_loops() > 0) {
    corpus.warnings.push_back("dropped " + std::to_string(corpus.graph.dropped_self_loops()) +
                              " self-loop edge(s)");
  }
  if (corpus.graph.dropped_duplicates() > 0) {
    corpus.warnings.push_back("dropped " + std::to_string(corpus.graph.dropped_duplicates()) +
                              " duplicate edge(s)");
  }
  corpus.graph.Finalize();
  // Without a red-link sidecar entry, an article's own link_count (all
  // internal links, existing or not) supplies the red links.
  for (const Article& a : corpus.articles) {
    const int node = *corpus.graph.find(a.id);
    if (red_link_nodes.count(node) || a.raw_link_count == 0) continue;
    const int64_t out = static_cast<int64_t>(corpus.graph.successors(node).size());
    corpus.graph.set_red_links(node, std::max<int64_t>(0, a.raw_link_count - out));
  }
  return corpus;
}

}  // namespace wikiqual
