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

#ifndef WIKIQUAL_QUALITY_CLASS_H_
#define WIKIQUAL_QUALITY_CLASS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace wikiqual {

// WikiProject quality grades. The underlying value is the ordinal used for
// MSE: Stub = 0 ... FA = 6.
enum class QualityClass : int { Stub = 0, Start, C, B, GA, A, FA };

inline constexpr int kNumQualityClasses = 7;

inline constexpr std::array<QualityClass, kNumQualityClasses> kAllQualityClasses = {
    QualityClass::Stub, QualityClass::Start, QualityClass::C, QualityClass::B,
    QualityClass::GA,   QualityClass::A,     QualityClass::FA};

constexpr int ToOrdinal(QualityClass c) { return static_cast<int>(c); }

// Throws std::out_of_range outside [0, 6].
QualityClass FromOrdinal(int ordinal);

std::string_view ToString(QualityClass c);

// Accepts the short labels ("FA", "GA", "Stub", ...) and the "-Class"
// suffixed forms, case-insensitively.
std::optional<QualityClass> ParseQualityClass(std::string_view text);

}  // namespace wikiqual

#endif  // WIKIQUAL_QUALITY_CLASS_H_
