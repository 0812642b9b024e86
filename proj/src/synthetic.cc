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

#include "wikiqual/synthetic.h"

#include <array>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "wikiqual/errors.h"
#include "wikiqual/random.h"

namespace wikiqual {
namespace {

constexpr std::array<const char*, 96> kCommon = {
    "the", "a", "of", "and", "to", "in", "is", "was", "it", "for", "on", "that", "with", "as",
    "by", "he", "she", "they", "this", "from", "at", "his", "her", "their", "an", "be", "are",
    "were", "been", "has", "had", "not", "but", "or", "which", "who", "its", "can", "will",
    "would", "may", "city", "river", "king", "war", "year", "town", "name", "people", "house",
    "church", "school", "game", "team", "song", "band", "film", "book", "land", "water",
    "small", "large", "old", "new", "first", "last", "early", "late", "great", "long", "short",
    "built", "made", "found", "known", "called", "played", "named", "moved", "became", "used",
    "later", "often", "also", "only", "very", "then", "there", "here", "north", "south", "east",
    "west", "near", "after", "before"};

constexpr std::array<const char*, 48> kLong = {
    "administration", "architecture", "agricultural", "constitutional", "significantly",
    "international", "representative", "independence", "establishment", "characteristic",
    "metropolitan", "parliamentary", "manufacturing", "archaeological", "predominantly",
    "controversial", "documentation", "infrastructure", "correspondence", "subsequently",
    "approximately", "environmental", "philosophical", "technological", "investigation",
    "contemporary", "observatory", "geographical", "mathematician", "photographic",
    "composition", "distribution", "conservation", "territorial", "monumental", "ecclesiastical",
    "industrial", "municipality", "population", "development", "university", "professional",
    "particularly", "historically", "economically", "traditionally", "politically", "literary"};

class Writer {
 public:
  Writer(int q, uint64_t seed) : q_(q), rng_(seed) {}

  std::string Article() {
    std::string out;
    if (rng_.Uniform() < 0.5) out += "{{Infobox place|name=Example|size=" + std::to_string(q_) + "}}\n";
    out += Paragraph(true) + "\n\n";
    if (q_ >= 3) out += Paragraph(true) + "\n\n";
    const int sections = q_ + static_cast<int>(rng_.Below(3));
    for (int s = 0; s < sections; ++s) {
      out += "== " + Title() + " ==\n";
      const int paras = 1 + static_cast<int>(rng_.Below(q_ / 2 + 1));
      for (int p = 0; p < paras; ++p) out += Paragraph(false) + "\n\n";
      if (q_ >= 2 && rng_.Uniform() < 0.15 * q_) {
        out += "=== " + Title() + " ===\n" + Paragraph(false) + "\n\n";
      }
      if (rng_.Uniform() < 0.1 * q_) out += "[[File:Example" + std::to_string(s) + ".jpg|thumb|A " + Word() + "]]\n";
    }
    if (q_ >= 2) {
      out += "== References ==\n{{reflist}}\n\n== External links ==\n";
      const int links = 1 + static_cast<int>(rng_.Below(q_));
      for (int i = 0; i < links; ++i) {
        out += "* [http://example.org/" + std::to_string(i) + " " + Word() + " site]\n";
      }
    }
    if (rng_.Uniform() < 0.3) out += "\n{{stub}}\n";
    out += "\n[[Category:" + Title() + "]]\n";
    return out;
  }

 private:
  std::string Word() {
    const double p_long = 0.04 + 0.025 * q_;
    if (rng_.Uniform() < p_long) return kLong[rng_.Below(kLong.size())];
    return kCommon[rng_.Below(kCommon.size())];
  }

  std::string Title() {
    std::string w = kLong[rng_.Below(kLong.size())];
    w[0] = static_cast<char>(w[0] - 32);
    return w;
  }

  std::string Sentence(bool lead) {
    const int words = 4 + static_cast<int>(rng_.Below(8 + 2 * q_));
    std::string s;
    for (int i = 0; i < words; ++i) {
      std::string w = Word();
      if (i == 0) w[0] = static_cast<char>(w[0] - 32);
      if (i > 0) s += ' ';
      if (i > 0 && rng_.Uniform() < 0.06 + 0.01 * q_) {
        s += "[[" + w + "]]";
      } else if (lead && i == 0) {
        s += "'''" + w + "'''";
      } else {
        s += w;
      }
      if (i > 0 && i + 1 < words && rng_.Uniform() < 0.05) s += ',';
    }
    const double r = rng_.Uniform();
    s += r < 0.04 ? "?" : r < 0.07 ? "!" : ".";
    if (rng_.Uniform() < 0.08 * q_) {
      s += "<ref>{{cite web|title=" + Title() + "|url=http://example.org}}</ref>";
    }
    return s;
  }

  std::string Paragraph(bool lead) {
    const int sentences = 2 + static_cast<int>(rng_.Below(3 + q_ / 2));
    std::string p;
    for (int i = 0; i < sentences; ++i) {
      if (i > 0) p += ' ';
      p += Sentence(lead && i == 0);
    }
    return p;
  }

  int q_;
  Rng rng_;
};

std::string Hex(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

std::ofstream Open(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

}  // namespace

std::string SyntheticWikitext(int quality_ordinal, uint64_t seed) {
  return Writer(quality_ordinal, seed).Article();
}

CorpusPaths WriteSyntheticCorpus(const std::string& dir, const SyntheticOptions& options) {
  std::filesystem::create_directories(dir);
  CorpusPaths paths{dir + "/articles.jsonl", dir + "/revisions.jsonl", dir + "/graph.tsv",
                    dir + "/discussions.jsonl", dir + "/snapshots.jsonl", dir + "/red_links.jsonl"};
  std::ofstream articles = Open(paths.articles), revisions = Open(paths.revisions),
                graph = Open(paths.graph), discussions = Open(paths.discussions),
                snapshots = Open(paths.snapshots), red = Open(paths.red_links);
  Rng rng(options.seed);
  std::vector<std::string> ids;
  std::vector<int> quality;
  for (int q = 0; q < 7; ++q) {
    for (int i = 0; i < options.articles_per_class; ++i) {
      ids.push_back("syn-" + std::to_string(q) + "-" + std::to_string(i));
      quality.push_back(q);
    }
  }
  graph << "# citing\tcited\n";
  using nlohmann::json;
  for (size_t a = 0; a < ids.size(); ++a) {
    const int q = quality[a];
    const std::string text = SyntheticWikitext(q, DeriveSeed(options.seed, a));
    articles << json{{"id", ids[a]},
                     {"title", "Synthetic " + ids[a]},
                     {"wikitext", text},
                     {"label", std::string(ToString(FromOrdinal(q)))},
                     {"translations", rng.Below(1 + 5 * q)}}
                    .dump()
             << '\n';

    const int n_rev = 3 + 8 * q + static_cast<int>(rng.Below(10));
    const int pool = std::max(1, n_rev / 2);
    const double anon = 0.6 - 0.07 * q;
    const int64_t span_days = 60 + 250 * q + static_cast<int64_t>(rng.Below(200));
    std::vector<int64_t> offsets(n_rev);
    for (int64_t& o : offsets) o = static_cast<int64_t>(rng.Below(span_days * 86400));
    std::sort(offsets.begin(), offsets.end(), std::greater<>());
    std::vector<std::string> hashes;
    for (int r = 0; r < n_rev; ++r) {
      // Skewed user choice: low indices edit more often.
      const int u = static_cast<int>(static_cast<double>(pool) * rng.Uniform() * rng.Uniform());
      const bool anonymous = rng.Uniform() < anon;
      std::string hash;
      if (!hashes.empty() && rng.Uniform() < 0.05) {
        hash = hashes[rng.Below(hashes.size())];
      } else {
        hash = Hex(rng.Next());
      }
      hashes.push_back(hash);
      revisions << json{{"article_id", ids[a]},
                        {"revision_id", ids[a] + "-r" + std::to_string(r)},
                        {"timestamp", FormatRfc3339(options.now - std::chrono::seconds(offsets[r] + 3600))},
                        {"user", anonymous ? "10.0." + std::to_string(u) + "." + std::to_string(a % 250)
                                           : "User" + std::to_string(u + 7 * static_cast<int>(a % 40))},
                        {"anonymous", anonymous},
                        {"sha1", hash},
                        {"size", 100 + rng.Below(5000)}}
                       .dump()
                << '\n';
    }

    const int links = 1 + q + static_cast<int>(rng.Below(3));
    for (int l = 0; l < links; ++l) {
      // Prefer citing higher-quality articles.
      const size_t lo = std::min(ids.size() - 1, rng.Below(ids.size()) / 2 + ids.size() / 2 * (rng.Uniform() < 0.5));
      if (lo != a) graph << ids[a] << '\t' << ids[lo] << '\n';
    }
    if (rng.Uniform() < 0.5) graph << ids[a] << "\text-" << rng.Below(50) << '\n';

    discussions << json{{"article_id", ids[a]}, {"discussion_count", rng.Below(1 + 3 * q)}}.dump() << '\n';

    std::string older;
    size_t start = 0;
    const double churn = 0.5 - 0.06 * q;
    while (start < text.size()) {
      size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      const std::string line = text.substr(start, end - start);
      if (rng.Uniform() >= churn) older += line + "\n";
      start = end + 1;
    }
    snapshots << json{{"article_id", ids[a]}, {"text_now", text}, {"text_3mo", older}}.dump() << '\n';
    red << json{{"id", ids[a]}, {"red_links", rng.Below(6)}}.dump() << '\n';
  }
  return paths;
}

}  // namespace wikiqual
