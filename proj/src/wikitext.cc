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

#include "wikiqual/wikitext.h"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "wikiqual/segment.h"
#include "wikiqual/text_util.h"

namespace wikiqual {

int64_t DocumentStructure::SyllableTotal() const {
  int64_t total = 0;
  for (int s : syllable_counts) total += s;
  return total;
}

namespace {

constexpr int kMaxInlineDepth = 8;

constexpr std::array<std::string_view, 33> kNamespaces = {
    "category", "file",     "image",     "media",  "template",  "wikipedia",
    "wp",       "help",     "portal",    "special", "talk",     "user",
    "module",   "draft",    "mediawiki", "book",   "timedtext", "wikt",
    "wiktionary", "commons", "s",        "wikisource", "q",     "wikiquote",
    "n",        "v",        "b",         "species", "meta",     "mw",
    "d",        "voy",      "user talk"};

bool IsLanguageCode(std::string_view p) {
  if (p.size() < 2) return false;
  size_t i = 0;
  while (i < p.size() && p[i] >= 'a' && p[i] <= 'z') ++i;
  if (i < 2 || i > 3) return false;
  while (i < p.size()) {
    if (p[i] != '-') return false;
    size_t j = ++i;
    while (i < p.size() && p[i] >= 'a' && p[i] <= 'z') ++i;
    if (i - j < 2 || i - j > 8) return false;
  }
  return true;
}

enum class LinkKind { kInternal, kImage, kNamespace };

LinkKind ClassifyLinkTarget(std::string_view target) {
  target = Trim(target);
  if (!target.empty() && target.front() == ':') return LinkKind::kNamespace;
  const size_t colon = target.find(':');
  if (colon == std::string_view::npos) return LinkKind::kInternal;
  const std::string_view prefix = Trim(target.substr(0, colon));
  if (EqualsIgnoreCase(prefix, "file") || EqualsIgnoreCase(prefix, "image")) {
    return LinkKind::kImage;
  }
  const std::string lower = ToLowerAscii(prefix);
  if (std::find(kNamespaces.begin(), kNamespaces.end(), lower) != kNamespaces.end()) {
    return LinkKind::kNamespace;
  }
  if (IsLanguageCode(prefix)) return LinkKind::kNamespace;
  return LinkKind::kInternal;
}

bool AtIgnoreCase(std::string_view s, size_t i, std::string_view token) {
  return i + token.size() <= s.size() && EqualsIgnoreCase(s.substr(i, token.size()), token);
}

size_t FindIgnoreCase(std::string_view s, std::string_view token, size_t from) {
  if (token.empty()) return from;
  for (size_t i = from; i + token.size() <= s.size(); ++i) {
    if (AtIgnoreCase(s, i, token)) return i;
  }
  return std::string_view::npos;
}

// Position just past the "close" matching an "open" that ends at `from`,
// honoring nesting, or npos.
size_t FindMatching(std::string_view s, size_t from, std::string_view open,
                    std::string_view close) {
  int depth = 1;
  size_t i = from;
  while (i + close.size() <= s.size()) {
    if (s.compare(i, open.size(), open) == 0) {
      ++depth;
      i += open.size();
    } else if (s.compare(i, close.size(), close) == 0) {
      if (--depth == 0) return i + close.size();
      i += close.size();
    } else {
      ++i;
    }
  }
  return std::string_view::npos;
}

bool IsTagNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool IsUrlStart(std::string_view s, size_t i) {
  return AtIgnoreCase(s, i, "http://") || AtIgnoreCase(s, i, "https://") ||
         AtIgnoreCase(s, i, "ftp://");
}

bool IsUrlStop(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '<' || c == '>' || c == '[' ||
         c == ']' || c == '"' || c == '|' || c == '{' || c == '}';
}

struct Part {
  std::string raw;
};

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  DocumentStructure Run() {
    const std::string stripped = StripBlocks(source_);
    SplitIntoParts(stripped);
    Assemble();
    return std::move(doc_);
  }

 private:
  // Removes comments, references, galleries, math, templates and tables.
  std::string StripBlocks(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (c == '<') {
        if (s.compare(i, 4, "<!--") == 0) {
          const size_t end = s.find("-->", i + 4);
          if (end == std::string_view::npos) {
            ++doc_.anomaly_count;
            break;
          }
          i = end + 3;
          continue;
        }
        if (AtIgnoreCase(s, i, "<ref") &&
            (i + 4 >= s.size() || !IsTagNameChar(s[i + 4]))) {
          i = SkipRef(s, i);
          continue;
        }
        if (AtIgnoreCase(s, i, "<gallery")) {
          i = SkipGallery(s, i);
          continue;
        }
        if (AtIgnoreCase(s, i, "<math")) {
          i = SkipElement(s, i, "</math");
          continue;
        }
      } else if (c == '{' && i + 1 < s.size() && s[i + 1] == '{') {
        i = SkipTemplate(s, i);
        continue;
      } else if (c == '{' && i + 1 < s.size() && s[i + 1] == '|' &&
                 (i == 0 || s[i - 1] == '\n')) {
        const size_t end = FindMatching(s, i + 2, "{|", "|}");
        if (end == std::string_view::npos) {
          ++doc_.anomaly_count;
          i += 2;
        } else {
          i = end;
        }
        continue;
      }
      out.push_back(c);
      ++i;
    }
    return out;
  }

  size_t SkipRef(std::string_view s, size_t i) {
    const size_t tag_end = s.find('>', i);
    if (tag_end == std::string_view::npos) {
      ++doc_.anomaly_count;
      return i + 4;
    }
    if (s[tag_end - 1] == '/') return tag_end + 1;  // <ref name="x" /> reuse
    const size_t close = FindIgnoreCase(s, "</ref", tag_end + 1);
    if (close == std::string_view::npos) {
      ++doc_.anomaly_count;
      return tag_end + 1;
    }
    const size_t close_end = s.find('>', close);
    ++doc_.citation_count;
    return close_end == std::string_view::npos ? s.size() : close_end + 1;
  }

  size_t SkipGallery(std::string_view s, size_t i) {
    const size_t tag_end = s.find('>', i);
    if (tag_end == std::string_view::npos) {
      ++doc_.anomaly_count;
      return i + 8;
    }
    const size_t close = FindIgnoreCase(s, "</gallery", tag_end + 1);
    if (close == std::string_view::npos) {
      ++doc_.anomaly_count;
      return tag_end + 1;
    }
    std::string_view body = s.substr(tag_end + 1, close - tag_end - 1);
    size_t pos = 0;
    while (pos < body.size()) {
      size_t eol = body.find('\n', pos);
      if (eol == std::string_view::npos) eol = body.size();
      if (!Trim(body.substr(pos, eol - pos)).empty()) ++doc_.image_count;
      pos = eol + 1;
    }
    const size_t close_end = s.find('>', close);
    return close_end == std::string_view::npos ? s.size() : close_end + 1;
  }

  size_t SkipElement(std::string_view s, size_t i, std::string_view closing) {
    const size_t tag_end = s.find('>', i);
    if (tag_end == std::string_view::npos) {
      ++doc_.anomaly_count;
      return i + 1;
    }
    if (s[tag_end - 1] == '/') return tag_end + 1;
    const size_t close = FindIgnoreCase(s, closing, tag_end + 1);
    if (close == std::string_view::npos) {
      ++doc_.anomaly_count;
      return tag_end + 1;
    }
    const size_t close_end = s.find('>', close);
    return close_end == std::string_view::npos ? s.size() : close_end + 1;
  }

  size_t SkipTemplate(std::string_view s, size_t i) {
    const size_t end = FindMatching(s, i + 2, "{{", "}}");
    if (end == std::string_view::npos) {
      ++doc_.anomaly_count;
      return i + 2;
    }
    std::string_view inner = s.substr(i + 2, end - i - 4);
    const size_t bar = inner.find('|');
    std::string_view name = Trim(inner.substr(0, bar));
    if (StartsWithIgnoreCase(name, "cite")) ++doc_.citation_count;
    return end;
  }

  void SplitIntoParts(std::string_view text) {
    parts_.emplace_back();  // abstract
    bool external_section = false;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;

      int level = 0;
      std::string_view title;
      if (ParseHeading(line, &level, &title)) {
        Section section;
        section.title = CollapseWhitespace(Inline(title, false, 0));
        section.depth = std::max(1, level - 1);
        for (int k = static_cast<int>(doc_.sections.size()) - 1; k >= 0; --k) {
          if (doc_.sections[k].depth < section.depth) {
            section.parent = k;
            break;
          }
        }
        if (section.depth == 1) {
          external_section = StartsWithIgnoreCase(section.title, "external link");
        }
        doc_.sections.push_back(std::move(section));
        parts_.emplace_back();
        continue;
      }

      std::string_view content = line;
      if (Trim(content) == "----") content = {};
      while (!content.empty() &&
             (content[0] == '*' || content[0] == '#' || content[0] == ':' ||
              content[0] == ';')) {
        content.remove_prefix(1);
      }
      Part& part = parts_.back();
      part.raw.append(Inline(content, external_section, 0));
      part.raw.push_back('\n');
    }
  }

  static bool ParseHeading(std::string_view line, int* level, std::string_view* title) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.remove_suffix(1);
    }
    if (line.size() < 3 || line.front() != '=' || line.back() != '=') return false;
    size_t lead = 0;
    while (lead < line.size() && line[lead] == '=') ++lead;
    size_t trail = 0;
    while (trail < line.size() && line[line.size() - 1 - trail] == '=') ++trail;
    if (lead + trail >= line.size()) return false;
    const size_t n = std::min<size_t>({lead, trail, 6});
    std::string_view inner = line.substr(n, line.size() - 2 * n);
    if (Trim(inner).empty()) return false;
    *level = static_cast<int>(n);
    *title = Trim(inner);
    return true;
  }

  std::string Inline(std::string_view s, bool external_section, int depth) {
    std::string out;
    if (depth > kMaxInlineDepth) return out;
    size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (c == '[' && i + 1 < s.size() && s[i + 1] == '[') {
        const size_t end = FindMatching(s, i + 2, "[[", "]]");
        if (end == std::string_view::npos) {
          ++doc_.anomaly_count;
          i += 2;
          continue;
        }
        std::string_view inner = s.substr(i + 2, end - i - 4);
        const size_t bar = inner.find('|');
        std::string_view target = inner.substr(0, bar);
        switch (ClassifyLinkTarget(target)) {
          case LinkKind::kImage:
            ++doc_.image_count;
            break;
          case LinkKind::kNamespace:
            break;
          case LinkKind::kInternal: {
            ++doc_.internal_link_count;
            std::string_view label =
                bar == std::string_view::npos ? target : inner.substr(bar + 1);
            if (Trim(label).empty()) label = target;
            out.append(Inline(label, external_section, depth + 1));
            break;
          }
        }
        i = end;
        continue;
      }
      if (c == '[' && (IsUrlStart(s, i + 1) || s.compare(i + 1, 2, "//") == 0 ||
                       AtIgnoreCase(s, i + 1, "mailto:"))) {
        const size_t close = s.find(']', i + 1);
        if (close == std::string_view::npos) {
          ++doc_.anomaly_count;
          ++i;
          continue;
        }
        ++doc_.external_link_count;
        std::string_view inner = s.substr(i + 1, close - i - 1);
        const size_t space = inner.find(' ');
        if (space != std::string_view::npos) {
          out.append(Inline(inner.substr(space + 1), external_section, depth + 1));
        }
        i = close + 1;
        continue;
      }
      if ((c == 'h' || c == 'H' || c == 'f' || c == 'F') && IsUrlStart(s, i)) {
        size_t end = i;
        while (end < s.size() && !IsUrlStop(s[end])) ++end;
        if (external_section) ++doc_.external_link_count;
        i = end;
        continue;
      }
      if (c == '\'' && i + 1 < s.size() && s[i + 1] == '\'') {
        while (i < s.size() && s[i] == '\'') ++i;
        continue;
      }
      if (c == '<' && i + 1 < s.size() &&
          (IsTagNameChar(s[i + 1]) || (s[i + 1] == '/' && i + 2 < s.size() &&
                                       IsTagNameChar(s[i + 2])))) {
        const size_t close = s.find('>', i + 1);
        const size_t reopen = s.find('<', i + 1);
        if (close != std::string_view::npos && close < reopen) {
          if (AtIgnoreCase(s, i, "<br")) out.push_back(' ');
          i = close + 1;
          continue;
        }
      }
      if (c == '_' && s.compare(i, 2, "__") == 0) {
        size_t j = i + 2;
        while (j < s.size() && s[j] >= 'A' && s[j] <= 'Z') ++j;
        if (j > i + 2 && s.compare(j, 2, "__") == 0) {
          i = j + 2;
          continue;
        }
      }
      out.push_back(c);
      ++i;
    }
    return out;
  }

  void Assemble() {
    for (size_t p = 0; p < parts_.size(); ++p) {
      std::vector<std::string> paragraphs = SplitParagraphs(parts_[p].raw);
      int64_t size = 0;
      std::string body;
      for (const std::string& para : paragraphs) {
        size += static_cast<int64_t>(Utf8Length(para));
        if (!body.empty()) body.append("\n\n");
        body.append(para);
        doc_.paragraphs.push_back(para);
      }
      if (p == 0) {
        doc_.abstract_text = std::move(body);
        doc_.abstract_size = size;
      } else {
        doc_.sections[p - 1].body_text = std::move(body);
        doc_.sections[p - 1].char_size = size;
      }
      doc_.character_count += size;
    }
    for (const std::string& para : doc_.paragraphs) {
      if (!doc_.plain_text.empty()) doc_.plain_text.append("\n\n");
      doc_.plain_text.append(para);
    }
    for (const std::string& para : doc_.paragraphs) {
      for (Sentence& sentence : SplitSentences(para)) {
        for (const std::string& token : sentence.tokens) {
          doc_.tokens.push_back(token);
          doc_.syllable_counts.push_back(CountSyllables(token));
        }
        doc_.sentences.push_back(std::move(sentence));
      }
    }
  }

  std::string_view source_;
  DocumentStructure doc_;
  std::vector<Part> parts_;
};

}  // namespace

DocumentStructure ParseWikitext(std::string_view wikitext) {
  return Parser(wikitext).Run();
}

}  // namespace wikiqual
