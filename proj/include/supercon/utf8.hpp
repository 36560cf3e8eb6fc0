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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// All character offsets in this codebase count Unicode scalar values, not
// bytes. Text is stored as UTF-8 and decoded to char32_t for span work.
namespace supercon::utf8 {

/// Decodes UTF-8 to code points. Invalid bytes decode to U+FFFD, one
/// replacement per bad byte, so offsets stay stable.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

/// Number of code points in a UTF-8 string.
std::size_t length(std::string_view text);

/// Slice [start, end) in code-point offsets, returned as UTF-8.
std::string substr(std::string_view text, std::size_t start, std::size_t end);

bool is_ascii_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);

/// Letters usable inside tokens: ASCII letters plus Greek and Latin-1
/// letter ranges (covers δ, Δ, é and friends seen in materials text).
bool is_letter(char32_t cp);

bool is_space(char32_t cp);

/// ASCII + Greek lowercasing, identity elsewhere.
char32_t fold(char32_t cp);
std::u32string fold(std::u32string_view text);

}  // namespace supercon::utf8
