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

#ifndef WIKIQUAL_TEXTFEAT_H_
#define WIKIQUAL_TEXTFEAT_H_

#include "wikiqual/document.h"
#include "wikiqual/feature_vector.h"

namespace wikiqual {

// character_count (code points, spaces included), word_count,
// sentence_count, syllable_count.
FeatureVector LengthFeatures(const DocumentStructure& doc);

// The 21 structure features. Section sizes are taken over depth-1 sections
// and include the text of their subsections; per-section ratios divide by
// the depth-1 section count; the standard deviation is the population one.
// Citations and external links per text length divide by character_count,
// images per text length by sentence_count.
FeatureVector StructureFeatures(const DocumentStructure& doc);

}  // namespace wikiqual

#endif  // WIKIQUAL_TEXTFEAT_H_
