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

#ifndef WIKIQUAL_TEXT_UTIL_H_
#define WIKIQUAL_TEXT_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace wikiqual {

// Decodes the code point starting at s[*pos] and advances *pos. Invalid or
// truncated sequences decode to U+FFFD and advance by one byte, so decoding
// never stalls on arbitrary bytes.
char32_t DecodeUtf8(std::string_view s, size_t* pos);

void AppendUtf8(char32_t cp, std::string* out);

// Number of code points (lenient decoding, see DecodeUtf8).
size_t Utf8Length(std::string_view s);

bool IsSpace(char32_t cp);
// Letters and digits, including non-ASCII letters. Punctuation blocks of
// Latin-1, General Punctuation and CJK punctuation are not word characters.
bool IsWordChar(char32_t cp);
bool IsUpper(char32_t cp);
bool IsAsciiAlnum(char32_t cp);

// ASCII-only lower casing; other bytes pass through unchanged.
std::string ToLowerAscii(std::string_view s);

// Simple lowercase mapping for Basic Latin, Latin-1, Latin Extended-A,
// Greek and Cyrillic. Other code points are returned unchanged.
char32_t FoldCase(char32_t cp);

// Collapses every run of whitespace (including newlines) into one space and
// trims both ends.
std::string CollapseWhitespace(std::string_view s);

std::string_view Trim(std::string_view s);

bool StartsWithIgnoreCase(std::string_view s, std::string_view prefix);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);

}  // namespace wikiqual

#endif  // WIKIQUAL_TEXT_UTIL_H_
