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

#include "wikiqual/quality_class.h"

#include <stdexcept>

#include "wikiqual/text_util.h"

namespace wikiqual {

namespace {
constexpr std::array<std::string_view, kNumQualityClasses> kNames = {
    "Stub", "Start", "C", "B", "GA", "A", "FA"};
}  // namespace

QualityClass FromOrdinal(int ordinal) {
  if (ordinal < 0 || ordinal >= kNumQualityClasses) {
    throw std::out_of_range("quality ordinal out of range: " + std::to_string(ordinal));
  }
  return static_cast<QualityClass>(ordinal);
}

std::string_view ToString(QualityClass c) { return kNames[ToOrdinal(c)]; }

std::optional<QualityClass> ParseQualityClass(std::string_view text) {
  text = Trim(text);
  std::string lower = ToLowerAscii(text);
  constexpr std::string_view kSuffix = "-class";
  if (lower.size() > kSuffix.size() &&
      lower.compare(lower.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    lower.resize(lower.size() - kSuffix.size());
  }
  for (QualityClass c : kAllQualityClasses) {
    if (lower == ToLowerAscii(ToString(c))) return c;
  }
  return std::nullopt;
}

}  // namespace wikiqual
