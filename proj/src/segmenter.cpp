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

#include "supercon/segmenter.hpp"

#include <algorithm>

#include "supercon/utf8.hpp"

namespace supercon {

namespace {

bool is_upper(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= 0x0391 && cp <= 0x03A9);
}

// Dotted abbreviations that must not end a sentence. Element-like
// capitalized tokens ("K.", "X.") are deliberately not here: unit and
// variable mentions before a period are real sentence ends.
const std::vector<std::u32string>& abbreviation_blocklist() {
  static const std::vector<std::u32string> entries = {
      U"et.",  U"al.",   U"e.g.",    U"i.e.",  U"vs.",  U"cf.",
      U"fig.", U"figs.", U"eq.",     U"eqs.",  U"ref.", U"refs.",
      U"no.",  U"ca.",   U"approx.", U"resp."};
  return entries;
}

// True if the text ending at `end` (exclusive, just past the '.') ends
// with a blocklisted abbreviation at a word boundary.
bool ends_with_abbreviation(const std::u32string& folded, std::size_t end) {
  for (const std::u32string& entry : abbreviation_blocklist()) {
    if (entry.size() > end) continue;
    if (folded.compare(end - entry.size(), entry.size(), entry) != 0) continue;
    std::size_t before = end - entry.size();
    if (before == 0 || !utf8::is_letter(folded[before - 1])) return true;
  }
  return false;
}

bool is_closing(char32_t cp) {
  return cp == U')' || cp == U']' || cp == U'"' || cp == U'\'' ||
         cp == 0x201D || cp == 0x2019;
}

}  // namespace

std::vector<ReferenceMarker> detect_reference_markers(
    std::string_view paragraph) {
  std::u32string text = utf8::decode(paragraph);
  std::vector<ReferenceMarker> markers;

  // Bracketed numeric citations: [12], [3, 5], [1-4].
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != U'[') continue;
    std::size_t j = i + 1;
    bool any_digit = false;
    bool ok = true;
    while (j < text.size() && text[j] != U']') {
      char32_t c = text[j];
      if (utf8::is_ascii_digit(c)) {
        any_digit = true;
      } else if (!(utf8::is_space(c) || c == U',' || c == U'-' ||
                   c == 0x2013 || c == U';')) {
        ok = false;
        break;
      }
      ++j;
    }
    if (ok && any_digit && j < text.size() && text[j] == U']') {
      markers.push_back(ReferenceMarker{
          Span{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j + 1)},
          ReferenceMarker::Style::numeric_bracket});
      i = j;
    }
  }

  // "Name et al." / "Name et. al. (2019)".
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_upper(text[i])) continue;
    if (i > 0 && utf8::is_letter(text[i - 1])) continue;
    std::size_t p = i;
    while (p < text.size() &&
           (utf8::is_letter(text[p]) || text[p] == U'-' || text[p] == 0x2019))
      ++p;
    std::size_t after_name = p;
    while (p < text.size() && utf8::is_space(text[p])) ++p;
    if (p == after_name) continue;
    auto try_token = [&](std::u32string_view token) {
      if (text.compare(p, token.size(), token) != 0) return false;
      if (token.back() != U'.' && p + token.size() < text.size() &&
          utf8::is_letter(text[p + token.size()]))
        return false;  // "et"/"al" must be whole words
      p += token.size();
      return true;
    };
    if (!(try_token(U"et.") || try_token(U"et"))) continue;
    while (p < text.size() && utf8::is_space(text[p])) ++p;
    if (!(try_token(U"al.") || try_token(U"al"))) continue;
    std::size_t end = p;
    // optional " (2019)"
    std::size_t q = p;
    while (q < text.size() && utf8::is_space(text[q])) ++q;
    if (q < text.size() && text[q] == U'(') {
      std::size_t r = q + 1;
      int digits = 0;
      while (r < text.size() && utf8::is_ascii_digit(text[r])) {
        ++digits;
        ++r;
      }
      if (digits == 4 && r < text.size() && text[r] == U')') end = r + 1;
    }
    markers.push_back(ReferenceMarker{
        Span{static_cast<std::int32_t>(i), static_cast<std::int32_t>(end)},
        ReferenceMarker::Style::author_year});
    i = end - 1;
  }

  std::sort(markers.begin(), markers.end(),
            [](const ReferenceMarker& a, const ReferenceMarker& b) {
              return a.span < b.span;
            });
  return markers;
}

std::vector<Span> segment(std::string_view paragraph,
                          const std::vector<ReferenceMarker>& markers) {
  std::u32string text = utf8::decode(paragraph);
  std::u32string folded = utf8::fold(text);
  const std::size_t n = text.size();
  if (n == 0) return {};

  auto inside_marker = [&](std::size_t boundary) {
    for (const ReferenceMarker& marker : markers)
      if (marker.span.start < static_cast<std::int32_t>(boundary) &&
          static_cast<std::int32_t>(boundary) < marker.span.end)
        return true;
    return false;
  };

  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i < n; ++i) {
    char32_t c = text[i];
    if (c != U'.' && c != U'!' && c != U'?') continue;
    // decimal point inside a number
    if (c == U'.' && i > 0 && i + 1 < n && utf8::is_ascii_digit(text[i - 1]) &&
        utf8::is_ascii_digit(text[i + 1]))
      continue;
    std::size_t j = i + 1;
    while (j < n && is_closing(text[j])) ++j;
    std::size_t k = j;
    while (k < n && utf8::is_space(text[k])) ++k;
    if (k == j || k >= n) continue;  // need whitespace then a next sentence
    if (!(is_upper(text[k]) || utf8::is_ascii_digit(text[k]))) continue;
    if (c == U'.' && ends_with_abbreviation(folded, i + 1)) continue;
    if (inside_marker(j)) continue;
    cuts.push_back(j);
  }

  std::vector<Span> spans;
  std::size_t last = 0;
  for (std::size_t cut : cuts) {
    spans.push_back(Span{static_cast<std::int32_t>(last),
                         static_cast<std::int32_t>(cut)});
    last = cut;
  }
  spans.push_back(
      Span{static_cast<std::int32_t>(last), static_cast<std::int32_t>(n)});
  return spans;
}

std::vector<SentencePiece> split_sentences(
    std::string_view paragraph, const std::vector<ReferenceMarker>& markers) {
  std::u32string text = utf8::decode(paragraph);
  std::vector<SentencePiece> pieces;
  for (const Span& span : segment(paragraph, markers)) {
    std::size_t start = span.start;
    std::size_t end = span.end;
    while (start < end && utf8::is_space(text[start])) ++start;
    while (end > start && utf8::is_space(text[end - 1])) --end;
    if (start == end) continue;
    pieces.push_back(SentencePiece{
        utf8::encode(std::u32string_view(text).substr(start, end - start)),
        static_cast<std::int32_t>(start)});
  }
  return pieces;
}

}  // namespace supercon
