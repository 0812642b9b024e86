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

#include "wikiqual/pos_tagger.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wikiqual/errors.h"
#include "wikiqual/segment.h"
#include "wikiqual/text_util.h"

namespace wikiqual {

namespace {

constexpr std::string_view kBoundary = "STAART";

std::vector<std::string> BuildTagset() {
  return {"CC",  "CD",  "DT",   "EX",  "FW",  "IN",   "JJ",  "JJR", "JJS", "LS",  "MD",
          "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS",
          "RP",  "SYM", "TO",   "UH",  "VB",  "VBD",  "VBG", "VBN", "VBP", "VBZ", "WDT",
          "WP",  "WP$", "WRB",  "#",   "$",   ".",    ",",   ":",   "(",   ")",   "``",
          "''"};
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string f;
  while (in >> f) fields.push_back(f);
  return fields;
}

bool IsComment(const std::string& line) {
  std::string_view t = Trim(line);
  return t.empty() || t.rfind(";;;", 0) == 0;
}

std::ifstream OpenResource(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open tagger resource " + path);
  return in;
}

}  // namespace

const std::vector<std::string>& PennTagset() {
  static const std::vector<std::string> tagset = BuildTagset();
  return tagset;
}

int PennTagIndex(std::string_view tag) {
  const auto& tagset = PennTagset();
  for (size_t i = 0; i < tagset.size(); ++i) {
    if (tagset[i] == tag) return static_cast<int>(i);
  }
  static const int sym = PennTagIndex("SYM");
  return sym;
}

size_t TaggedDocument::token_count() const {
  size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

int BrillTagger::Intern(std::string_view tag) {
  auto it = tag_index_.find(std::string(tag));
  if (it != tag_index_.end()) return it->second;
  const int id = static_cast<int>(tags_.size());
  tags_.emplace_back(tag);
  tag_index_.emplace(std::string(tag), id);
  return id;
}

BrillTagger BrillTagger::LoadFromDirectory(const std::string& dir) {
  std::ifstream lexicon = OpenResource(dir + "/lexicon.txt");
  std::ifstream lexical = OpenResource(dir + "/lexical_rules.txt");
  std::ifstream context = OpenResource(dir + "/context_rules.txt");
  return Load(lexicon, lexical, context);
}

BrillTagger BrillTagger::Load(std::istream& lexicon, std::istream& lexical_rules,
                              std::istream& context_rules) {
  BrillTagger t;
  for (const std::string& tag : PennTagset()) t.Intern(tag);
  t.nn_ = t.Intern("NN");
  t.nnp_ = t.Intern("NNP");
  t.cd_ = t.Intern("CD");
  t.boundary_ = t.Intern(kBoundary);

  auto normalize_tag = [&t](const std::string& raw) {
    std::string tag = raw.substr(0, raw.find('|'));
    if (PennTagset()[PennTagIndex(tag)] != tag) tag = "SYM";
    return t.Intern(tag);
  };

  std::string line;
  while (std::getline(lexicon, line)) {
    if (IsComment(line)) continue;
    std::vector<std::string> f = SplitFields(line);
    if (f.size() < 2) continue;
    t.lexicon_.emplace(f[0], normalize_tag(f[1]));
  }

  static const std::unordered_map<std::string, Cmd> kLexicalCmds = {
      {"char", Cmd::kChar},           {"haspref", Cmd::kHasPref},
      {"hassuf", Cmd::kHasSuf},       {"addpref", Cmd::kAddPref},
      {"addsuf", Cmd::kAddSuf},       {"deletepref", Cmd::kDeletePref},
      {"deletesuf", Cmd::kDeleteSuf}, {"goodleft", Cmd::kGoodLeft},
      {"goodright", Cmd::kGoodRight}};
  while (std::getline(lexical_rules, line)) {
    if (IsComment(line)) continue;
    std::vector<std::string> f = SplitFields(line);
    if (f.size() < 4) continue;
    LexicalRule r;
    std::string cmd;
    if (f[2].size() > 1 && f[2][0] == 'f' && kLexicalCmds.count(f[2].substr(1))) {
      // "NN s fhassuf 1 NNS x": conditional on the current tag.
      r.from = t.Intern(f[0]);
      r.x = f[1];
      cmd = f[2].substr(1);
    } else if (kLexicalCmds.count(f[1])) {
      // "ly hassuf 2 RB x"
      r.x = f[0];
      cmd = f[1];
    } else {
      continue;
    }
    r.cmd = kLexicalCmds.at(cmd);
    const bool has_length =
        r.cmd != Cmd::kChar && r.cmd != Cmd::kGoodLeft && r.cmd != Cmd::kGoodRight;
    const size_t tag_field = (r.from >= 0 ? 3 : 2) + (has_length ? 1 : 0);
    if (tag_field >= f.size()) continue;
    r.to = normalize_tag(f[tag_field]);
    t.lexical_rules_.push_back(std::move(r));
  }

  static const std::unordered_map<std::string, Cmd> kContextCmds = {
      {"PREVTAG", Cmd::kPrevTag},           {"NEXTTAG", Cmd::kNextTag},
      {"PREV2TAG", Cmd::kPrev2Tag},         {"NEXT2TAG", Cmd::kNext2Tag},
      {"PREV1OR2TAG", Cmd::kPrev1Or2Tag},   {"NEXT1OR2TAG", Cmd::kNext1Or2Tag},
      {"PREV1OR2OR3TAG", Cmd::kPrev1Or2Or3Tag}, {"NEXT1OR2OR3TAG", Cmd::kNext1Or2Or3Tag},
      {"SURROUNDTAG", Cmd::kSurroundTag},   {"CURWD", Cmd::kCurWd},
      {"PREVWD", Cmd::kPrevWd},             {"NEXTWD", Cmd::kNextWd},
      {"PREV1OR2WD", Cmd::kPrev1Or2Wd},     {"NEXT1OR2WD", Cmd::kNext1Or2Wd},
      {"PREVWDTAG", Cmd::kPrevWdTag},       {"NEXTWDTAG", Cmd::kNextWdTag},
      {"WDPREVTAG", Cmd::kWdPrevTag},       {"WDNEXTTAG", Cmd::kWdNextTag},
      {"WDAND2AFT", Cmd::kWdAnd2Aft},       {"WDAND2TAGBFR", Cmd::kWdAnd2TagBfr},
      {"WDAND2TAGAFT", Cmd::kWdAnd2TagAft}, {"LBIGRAM", Cmd::kLBigram},
      {"RBIGRAM", Cmd::kRBigram},           {"PREVBIGRAM", Cmd::kPrevBigram},
      {"NEXTBIGRAM", Cmd::kNextBigram}};
  while (std::getline(context_rules, line)) {
    if (IsComment(line)) continue;
    std::vector<std::string> f = SplitFields(line);
    if (f.size() < 4) continue;
    auto cmd = kContextCmds.find(f[2]);
    if (cmd == kContextCmds.end()) continue;
    ContextRule r;
    r.from = f[0] == "*" ? -1 : t.Intern(f[0]);
    r.to = normalize_tag(f[1]);
    r.cmd = cmd->second;
    r.x = f[3];
    if (f.size() > 4) r.y = f[4];
    r.xtag = t.Intern(r.x);
    if (!r.y.empty()) r.ytag = t.Intern(r.y);
    t.context_rules_.push_back(std::move(r));
  }
  return t;
}

bool BrillTagger::IsKnown(std::string_view word) const {
  return lexicon_.count(std::string(word)) > 0;
}

int BrillTagger::InitialTag(const std::string& word, bool* known) const {
  auto it = lexicon_.find(word);
  if (it == lexicon_.end()) it = lexicon_.find(ToLowerAscii(word));
  if (it != lexicon_.end()) {
    *known = true;
    return it->second;
  }
  *known = false;
  if (word.empty()) return nn_;
  if (word[0] >= '0' && word[0] <= '9') return cd_;
  size_t pos = 0;
  if (IsUpper(DecodeUtf8(word, &pos))) return nnp_;
  return nn_;
}

bool BrillTagger::LexicalMatches(const LexicalRule& r, const std::string& w,
                                 const std::string& prev, const std::string& next) const {
  const std::string& x = r.x;
  auto ends_with = [&w](const std::string& s) {
    return w.size() >= s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
  };
  switch (r.cmd) {
    case Cmd::kChar: return w.find(x) != std::string::npos;
    case Cmd::kHasPref: return w.rfind(x, 0) == 0;
    case Cmd::kHasSuf: return ends_with(x);
    case Cmd::kAddPref: return lexicon_.count(x + w) > 0;
    case Cmd::kAddSuf: return lexicon_.count(w + x) > 0;
    case Cmd::kDeletePref:
      return w.rfind(x, 0) == 0 && lexicon_.count(w.substr(x.size())) > 0;
    case Cmd::kDeleteSuf:
      return ends_with(x) && lexicon_.count(w.substr(0, w.size() - x.size())) > 0;
    case Cmd::kGoodLeft: return x == next;
    case Cmd::kGoodRight: return x == prev;
    default: return false;
  }
}

std::vector<std::string> BrillTagger::Tag(const std::vector<std::string>& tokens) const {
  constexpr int kPad = 3;
  const int n = static_cast<int>(tokens.size());
  std::vector<int> tags(n + 2 * kPad, boundary_);
  std::vector<const std::string*> words(n + 2 * kPad);
  static const std::string kBoundaryWord(kBoundary);
  for (int i = 0; i < n + 2 * kPad; ++i) words[i] = &kBoundaryWord;
  for (int i = 0; i < n; ++i) words[i + kPad] = &tokens[i];

  for (int i = 0; i < n; ++i) {
    bool known = false;
    int tag = InitialTag(tokens[i], &known);
    if (!known) {
      const std::string& prev = i > 0 ? tokens[i - 1] : kBoundaryWord;
      const std::string& next = i + 1 < n ? tokens[i + 1] : kBoundaryWord;
      for (const LexicalRule& r : lexical_rules_) {
        if (r.from >= 0 && r.from != tag) continue;
        if (LexicalMatches(r, tokens[i], prev, next)) tag = r.to;
      }
    }
    tags[i + kPad] = tag;
  }

  for (int i = kPad; i < n + kPad; ++i) {
    for (const ContextRule& r : context_rules_) {
      if (r.from >= 0 && tags[i] != r.from) continue;
      const std::string& x = r.x;
      const std::string& y = r.y;
      bool match = false;
      switch (r.cmd) {
        case Cmd::kPrevTag: match = tags[i - 1] == r.xtag; break;
        case Cmd::kNextTag: match = tags[i + 1] == r.xtag; break;
        case Cmd::kPrev2Tag: match = tags[i - 2] == r.xtag; break;
        case Cmd::kNext2Tag: match = tags[i + 2] == r.xtag; break;
        case Cmd::kPrev1Or2Tag: match = tags[i - 1] == r.xtag || tags[i - 2] == r.xtag; break;
        case Cmd::kNext1Or2Tag: match = tags[i + 1] == r.xtag || tags[i + 2] == r.xtag; break;
        case Cmd::kPrev1Or2Or3Tag:
          match = tags[i - 1] == r.xtag || tags[i - 2] == r.xtag || tags[i - 3] == r.xtag;
          break;
        case Cmd::kNext1Or2Or3Tag:
          match = tags[i + 1] == r.xtag || tags[i + 2] == r.xtag || tags[i + 3] == r.xtag;
          break;
        case Cmd::kSurroundTag: match = tags[i - 1] == r.xtag && tags[i + 1] == r.ytag; break;
        case Cmd::kCurWd: match = *words[i] == x; break;
        case Cmd::kPrevWd: match = *words[i - 1] == x; break;
        case Cmd::kNextWd: match = *words[i + 1] == x; break;
        case Cmd::kPrev1Or2Wd: match = *words[i - 1] == x || *words[i - 2] == x; break;
        case Cmd::kNext1Or2Wd: match = *words[i + 1] == x || *words[i + 2] == x; break;
        case Cmd::kPrevWdTag: match = *words[i - 1] == x && tags[i - 1] == r.ytag; break;
        case Cmd::kNextWdTag: match = *words[i + 1] == x && tags[i + 1] == r.ytag; break;
        case Cmd::kWdPrevTag: match = tags[i - 1] == r.xtag && *words[i] == y; break;
        case Cmd::kWdNextTag: match = *words[i] == x && tags[i + 1] == r.ytag; break;
        case Cmd::kWdAnd2Aft: match = *words[i] == x && *words[i + 2] == y; break;
        case Cmd::kWdAnd2TagBfr: match = tags[i - 2] == r.xtag && *words[i] == y; break;
        case Cmd::kWdAnd2TagAft: match = *words[i] == x && tags[i + 2] == r.ytag; break;
        case Cmd::kLBigram: match = *words[i - 1] == x && *words[i] == y; break;
        case Cmd::kRBigram: match = *words[i] == x && *words[i + 1] == y; break;
        case Cmd::kPrevBigram: match = tags[i - 2] == r.xtag && tags[i - 1] == r.ytag; break;
        case Cmd::kNextBigram: match = tags[i + 1] == r.xtag && tags[i + 2] == r.ytag; break;
        default: break;
      }
      if (match) tags[i] = r.to;
    }
  }

  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::string& tag = tags_[tags[i + kPad]];
    out.push_back(PennTagset()[PennTagIndex(tag)]);
  }
  return out;
}

TaggedDocument PosTag(const DocumentStructure& doc, const BrillTagger& tagger) {
  TaggedDocument tagged;
  tagged.paragraphs = doc.paragraphs;
  tagged.sentences.reserve(doc.sentences.size());
  for (const Sentence& sentence : doc.sentences) {
    std::vector<std::string> tags = tagger.Tag(sentence.tokens);
    TaggedSentence out;
    out.terminator = sentence.terminator;
    out.tokens.reserve(tags.size());
    for (size_t i = 0; i < tags.size(); ++i) {
      out.tokens.push_back(TaggedToken{sentence.tokens[i], std::move(tags[i]),
                                CountSyllables(sentence.tokens[i])});
    }
    tagged.sentences.push_back(std::move(out));
  }
  return tagged;
}

}  // namespace wikiqual
