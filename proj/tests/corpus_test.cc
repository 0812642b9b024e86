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

#include <string>

#include "test_util.h"
#include "wikiqual/corpus.h"
#include "wikiqual/errors.h"
#include "wikiqual/random.h"
#include "wikiqual/segment.h"
#include "wikiqual/text_util.h"
#include "wikiqual/wikitext.h"

using namespace wikiqual;
using wikiqual::testing::TempDir;
using wikiqual::testing::WriteFile;

namespace {

const char* kArticles =
    R"({"id":"a1","title":"Alpha","wikitext":"Alpha is first.","label":"FA","translations":3})" "\n"
    R"({"id":"a2","title":"Beta","wikitext":"Beta.\n== One ==\nText.","label":"Stub"})" "\n"
    R"({"id":"a3","title":"Gamma","wikitext":"Gamma.","label":null,"link_count":4})" "\n";

const char* kRevisions =
    R"({"article_id":"a1","revision_id":"1","timestamp":"2018-01-02T00:00:00Z","user":"u1","anonymous":false,"sha1":"h1","size":10})" "\n"
    R"({"article_id":"a1","revision_id":"2","timestamp":"2018-01-01T00:00:00Z","user":"u2","anonymous":true,"sha1":"h2","size":12})" "\n"
    R"({"article_id":"a2","revision_id":"3","timestamp":"2018-01-01T00:00:00Z","user":"u1","anonymous":false,"sha1":"h3","size":5})" "\n"
    R"({"article_id":"a3","revision_id":"4","timestamp":"2018-01-03T00:00:00Z","user":"u3","anonymous":false,"sha1":"h4","size":7})" "\n";

const char* kGraph = "a1\ta2\na2\ta3\na3\ta1\na3\ta1\n";

CorpusPaths WriteFixture(const TempDir& dir, const std::string& articles = kArticles) {
  CorpusPaths p;
  p.articles = dir.file("articles.jsonl");
  p.revisions = dir.file("revisions.jsonl");
  p.graph = dir.file("graph.tsv");
  WriteFile(p.articles, articles);
  WriteFile(p.revisions, kRevisions);
  WriteFile(p.graph, kGraph);
  return p;
}

int TopLevel(const DocumentStructure& d) {
  int n = 0;
  for (const Section& s : d.sections) n += s.depth == 1;
  return n;
}

}  // namespace

TEST_CASE("three-article fixture loads into articles, histories and a graph") {
  TempDir dir;
  const Corpus c = LoadCorpus(WriteFixture(dir));
  REQUIRE(c.articles.size() == 3);
  CHECK(c.histories.size() == 3);
  CHECK(c.graph.size() == 3);
  CHECK(c.graph.edge_count() == 3);
  CHECK(c.graph.dropped_duplicates() == 1);
  CHECK(c.articles[0].label == QualityClass::FA);
  CHECK_FALSE(c.articles[2].label.has_value());
  // Revisions are ordered by timestamp regardless of file order.
  const auto& revs = c.histories.at("a1").revisions;
  REQUIRE(revs.size() == 2);
  CHECK(revs[0].revision_id == "2");
  CHECK(revs[0].user_kind == UserKind::kAnonymous);
  CHECK(c.graph.translations(*c.graph.find("a1")) == 3);
}

TEST_CASE("duplicate article id is rejected with the id in the message") {
  TempDir dir;
  const std::string dup = std::string(kArticles) + R"({"id":"a2","wikitext":"again"})" + "\n";
  try {
    LoadCorpus(WriteFixture(dir, dup));
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("'a2'") != std::string::npos);
  }
}

TEST_CASE("malformed records report file, line and field") {
  TempDir dir;
  const std::string bad = std::string(kArticles) + R"({"id":"a4","label":"FA"})" + "\n";
  try {
    LoadCorpus(WriteFixture(dir, bad));
    FAIL("expected RecordError");
  } catch (const RecordError& e) {
    CHECK(e.line() == 4);
    CHECK(e.field() == "wikitext");
  }
  WriteFile(dir.file("articles.jsonl"), R"({"id":"x","wikitext":"t","label":"Great"})" "\n");
  CHECK_THROWS_AS(LoadArticles(dir.file("articles.jsonl")), RecordError);
  CHECK_THROWS_AS(LoadArticles(dir.file("missing.jsonl")), DataError);
}

TEST_CASE("RFC 3339 timestamps round-trip and reject garbage") {
  const Timestamp t = ParseRfc3339("2018-06-01T12:30:00Z");
  CHECK(FormatRfc3339(t) == "2018-06-01T12:30:00Z");
  CHECK(ParseRfc3339("2018-06-01T14:30:00+02:00") == t);
  CHECK_THROWS(ParseRfc3339("yesterday"));
}

TEST_CASE("heading grammar: one section, one subsection, abstract") {
  const DocumentStructure d = ParseWikitext("Intro.\n== A ==\nBody.\n=== A1 ===\nMore.");
  CHECK(TopLevel(d) == 1);
  CHECK(d.sections.size() == 2);
  CHECK(d.sections[1].parent == 0);
  CHECK(d.abstract_text == "Intro.");
  CHECK(d.abstract_size == 6);
}

TEST_CASE("citations and images are counted directly") {
  const DocumentStructure d = ParseWikitext(
      "A<ref>x</ref> b<ref name=\"n\">y</ref> c<ref>z</ref>.\n"
      "[[File:One.jpg|thumb|one]]\n[[File:Two.png|two [[link]] inside]]\nEnd.");
  CHECK(d.citation_count == 3);
  CHECK(d.image_count == 2);
  CHECK(d.plain_text.find("thumb") == std::string::npos);
  // A named reuse points at an existing citation.
  CHECK(ParseWikitext("A<ref name=\"n\">y</ref> b<ref name=\"n\" />.").citation_count == 1);
  CHECK(ParseWikitext("A.{{cite web|url=x}} B.").citation_count == 1);
}

TEST_CASE("hand-annotated fixture article") {
  const DocumentStructure d =
      ParseWikitext(testing::ReadFile(testing::TestDataPath("fixture_article.wiki")));
  CHECK(TopLevel(d) == 12);
  CHECK(d.sections.size() == 16);
  CHECK(d.image_count == 9);
  CHECK(d.citation_count == 4);
  CHECK(d.external_link_count == 2);
  CHECK(d.anomaly_count == 0);
  CHECK(d.plain_text.find("Infobox") == std::string::npos);
  CHECK(d.plain_text.find("Category") == std::string::npos);
  // Sizes partition the text.
  int64_t total = d.abstract_size;
  for (const Section& s : d.sections) total += s.char_size;
  CHECK(total == d.character_count);
}

TEST_CASE("segmentation") {
  const Segmentation s = Segment("Hello world. Bye.");
  CHECK(s.paragraphs.size() == 1);
  CHECK(s.sentences.size() == 2);
  CHECK(s.tokens.size() == 3);
  CHECK(Segment("Dr. Smith left.").sentences.size() == 1);
  CHECK(Segment("First para.\n\nSecond para.").paragraphs.size() == 2);
  CHECK(Segment("").tokens.empty());
}

TEST_CASE("syllable counts agree with the pronouncing dictionary") {
  CHECK(CountSyllables("elephant") == 3);
  CHECK(CountSyllables("queue") == 1);
  std::istringstream in(testing::ReadFile(testing::TestDataPath("syllable_oracle.tsv")));
  std::string line;
  int total = 0, agree = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    const std::string word = line.substr(0, tab);
    ++total;
    agree += CountSyllables(word) == std::stoi(line.substr(tab + 1));
  }
  REQUIRE(total == 200);
  // The vowel-group heuristic misses hiatus ("idea") and silent inner e
  // ("hopeless"); 176/200 is its measured agreement.
  MESSAGE("syllable agreement: " << agree << "/" << total);
  CHECK(agree >= 176);
}

TEST_CASE("sections partition the text on random markup") {
  Rng rng(11);
  const char* pieces[] = {"Word ", "== H ==\n", "=== S ===\n", "\n\n", "[[Link|text]] ", "{{t|x}}",
                          "<ref>r</ref>", "[http://x.org a] ", "'''b''' ", "é ", "[[File:a.jpg|c]]"};
  for (int round = 0; round < 200; ++round) {
    std::string text;
    const int len = static_cast<int>(rng.Below(40));
    for (int i = 0; i < len; ++i) text += pieces[rng.Below(std::size(pieces))];
    const DocumentStructure d = ParseWikitext(text);
    int64_t total = d.abstract_size;
    for (const Section& s : d.sections) total += s.char_size;
    CHECK(total == d.character_count);
    CHECK(d.tokens.size() == d.syllable_counts.size());
  }
}

TEST_CASE("malformed markup is recovered and flagged") {
  const DocumentStructure d = ParseWikitext("Text {{unclosed template and [[broken link. More <ref>x");
  CHECK(d.anomaly_count > 0);
}

TEST_CASE("utf-8 helpers") {
  std::string s;
  AppendUtf8(U'é', &s);
  AppendUtf8(U'🙂', &s);
  CHECK(Utf8Length(s) == 2);
  size_t pos = 0;
  CHECK(DecodeUtf8(s, &pos) == U'é');
  CHECK(FoldCase(U'É') == U'é');
  CHECK(FoldCase(U'Ω') == U'ω');
  CHECK(FoldCase(U'Ж') == U'ж');
}
