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

#include <string>
#include <string_view>
#include <vector>

#include "supercon/span.hpp"

namespace supercon {

/// A reference callout ("[12]", "Smith et al. (2019)") inside a
/// paragraph. Sentence segmentation never cuts strictly inside one.
struct ReferenceMarker {
  enum class Style { numeric_bracket, author_year };

  Span span;  // code-point offsets into the paragraph
  Style style = Style::numeric_bracket;

  bool operator==(const ReferenceMarker&) const = default;
};

/// Best-effort callout detection: bracketed numeric citations and
/// "Name et al. (year)" patterns. Callers with better knowledge should
/// pass markers explicitly.
std::vector<ReferenceMarker> detect_reference_markers(
    std::string_view paragraph);

/// Splits a paragraph into contiguous sentence spans that exactly
/// partition [0, length): concatenating the raw slices reproduces the
/// input. Cuts happen after {. ! ?} followed by whitespace and an
/// uppercase letter or digit, except after blocklisted abbreviations and
/// never strictly inside a reference marker.
std::vector<Span> segment(std::string_view paragraph,
                          const std::vector<ReferenceMarker>& markers);

/// A trimmed sentence with its code-point offset in the paragraph.
struct SentencePiece {
  std::string text;
  std::int32_t offset = 0;

  bool operator==(const SentencePiece&) const = default;
};

std::vector<SentencePiece> split_sentences(
    std::string_view paragraph, const std::vector<ReferenceMarker>& markers);

}  // namespace supercon
