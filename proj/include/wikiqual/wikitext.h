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

#ifndef WIKIQUAL_WIKITEXT_H_
#define WIKIQUAL_WIKITEXT_H_

#include <string_view>

#include "wikiqual/document.h"

namespace wikiqual {

// Parses MediaWiki markup into a DocumentStructure.
//
// Headings "== X ==" open depth-1 sections, "=== X ===" depth-2 and so on.
// <ref>...</ref> elements and {{cite ...}} templates outside refs count as
// citations. [[File:...]] and [[Image:...]] count as images, namespace-free
// [[...]] as internal links, bracketed [http...] links anywhere and bare
// URLs inside "External links" sections as external links. Other templates,
// tables, comments and tags are stripped.
//
// The parser is total: unbalanced markup is recovered from and counted in
// DocumentStructure::anomaly_count.
DocumentStructure ParseWikitext(std::string_view wikitext);

}  // namespace wikiqual

#endif  // WIKIQUAL_WIKITEXT_H_
