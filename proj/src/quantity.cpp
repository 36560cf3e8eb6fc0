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

#include "supercon/quantity.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "supercon/utf8.hpp"

namespace supercon {

std::string_view to_string(QuantityKind kind) {
  return kind == QuantityKind::temperature ? "temperature" : "pressure";
}

std::string_view to_string(Qualifier qualifier) {
  switch (qualifier) {
    case Qualifier::none: return "none";
    case Qualifier::greater: return ">";
    case Qualifier::less: return "<";
    case Qualifier::approx: return "~";
  }
  return "none";
}

std::optional<QuantityKind> quantity_kind_from(std::string_view name) {
  if (name == "temperature") return QuantityKind::temperature;
  if (name == "pressure") return QuantityKind::pressure;
  return std::nullopt;
}

std::optional<Qualifier> qualifier_from(std::string_view name) {
  if (name == "none") return Qualifier::none;
  if (name == ">") return Qualifier::greater;
  if (name == "<") return Qualifier::less;
  if (name == "~") return Qualifier::approx;
  return std::nullopt;
}

double Quantity::normalized_midpoint() const {
  if (normalized_high) return (normalized + *normalized_high) / 2.0;
  return normalized;
}

namespace {

struct UnitInfo {
  std::u32string spelling;
  QuantityKind kind;
  double factor;  // multiplicative, ignored for Celsius
  bool celsius;
};

const std::vector<UnitInfo>& units() {
  // Longest spellings first so "mK" wins over "K" and "GPa" over "Pa".
  static const std::vector<UnitInfo> table = {
      {U"GPa", QuantityKind::pressure, 1.0, false},
      {U"MPa", QuantityKind::pressure, 1e-3, false},
      {U"kbar", QuantityKind::pressure, 0.1, false},
      {U"bar", QuantityKind::pressure, 1e-4, false},
      {U"Pa", QuantityKind::pressure, 1e-9, false},
      {U"mK", QuantityKind::temperature, 1e-3, false},
      {U"°C", QuantityKind::temperature, 0.0, true},
      {U"K", QuantityKind::temperature, 1.0, false},
  };
  return table;
}

struct Cursor {
  const std::u32string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char32_t peek() const { return done() ? U'\0' : text[pos]; }

  void skip_spaces() {
    while (!done() && utf8::is_space(text[pos])) ++pos;
  }

  bool at_word_boundary() const {
    return done() || !(utf8::is_letter(text[pos]) ||
                       utf8::is_ascii_digit(text[pos]));
  }

  bool try_word(std::u32string_view word) {
    if (text.size() - pos < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (utf8::fold(text[pos + i]) != word[i]) return false;
    std::size_t save = pos;
    pos += word.size();
    if (!at_word_boundary()) {
      pos = save;
      return false;
    }
    return true;
  }
};

std::optional<double> parse_number(Cursor& cur) {
  std::size_t start = cur.pos;
  std::u32string digits;
  if (cur.peek() == U'+' || cur.peek() == U'-' || cur.peek() == 0x2212) {
    digits += cur.peek() == U'+' ? U'+' : U'-';
    ++cur.pos;
  }
  bool any = false;
  bool point = false;
  while (!cur.done()) {
    char32_t c = cur.peek();
    if (utf8::is_ascii_digit(c)) {
      digits += c;
      any = true;
      ++cur.pos;
    } else if (c == U'.' && !point) {
      point = true;
      digits += c;
      ++cur.pos;
    } else {
      break;
    }
  }
  if (!any) {
    cur.pos = start;
    return std::nullopt;
  }
  return std::stod(utf8::encode(digits));
}

bool try_range_separator(Cursor& cur) {
  char32_t c = cur.peek();
  if (c == U'-' || c == 0x2013 || c == 0x2014 || c == 0x2212) {
    ++cur.pos;
    return true;
  }
  return cur.try_word(U"to");
}

Qualifier parse_qualifier(Cursor& cur) {
  char32_t c = cur.peek();
  if (c == U'>' || c == 0x2265) {
    ++cur.pos;
    if (cur.peek() == U'=') ++cur.pos;
    return Qualifier::greater;
  }
  if (c == U'<' || c == 0x2264) {
    ++cur.pos;
    if (cur.peek() == U'=') ++cur.pos;
    return Qualifier::less;
  }
  if (c == U'~' || c == 0x2248 || c == 0x223C) {
    ++cur.pos;
    return Qualifier::approx;
  }
  // "over"/"under" are left alone: "under 2 GPa" usually means the
  // applied pressure, not a bound.
  if (cur.try_word(U"above")) return Qualifier::greater;
  if (cur.try_word(U"below")) return Qualifier::less;
  for (auto word : {U"about", U"around", U"approximately", U"approx", U"circa"})
    if (cur.try_word(word)) return Qualifier::approx;
  if (cur.try_word(U"up")) {
    cur.skip_spaces();
    if (cur.try_word(U"to")) return Qualifier::less;
  }
  return Qualifier::none;
}

const UnitInfo* parse_unit(Cursor& cur) {
  for (const UnitInfo& unit : units()) {
    if (cur.text.size() - cur.pos < unit.spelling.size()) continue;
    if (cur.text.compare(cur.pos, unit.spelling.size(), unit.spelling) != 0)
      continue;
    std::size_t save = cur.pos;
    cur.pos += unit.spelling.size();
    if (!cur.at_word_boundary()) {
      cur.pos = save;
      continue;
    }
    return &unit;
  }
  return nullptr;
}

double normalize(double value, const UnitInfo& unit) {
  if (unit.celsius) return value + 273.15;
  return value * unit.factor;
}

}  // namespace

Quantity parse_quantity(std::string_view surface) {
  std::u32string text = utf8::decode(surface);
  Cursor cur{text};
  cur.skip_spaces();
  if (cur.done()) throw QuantityParseError("empty quantity surface");

  Qualifier qualifier = parse_qualifier(cur);
  cur.skip_spaces();

  std::optional<double> first = parse_number(cur);
  if (!first)
    throw QuantityParseError("no numeric token in '" + std::string(surface) +
                             "'");

  cur.skip_spaces();
  std::optional<double> second;
  std::size_t before_sep = cur.pos;
  if (try_range_separator(cur)) {
    cur.skip_spaces();
    second = parse_number(cur);
    if (!second) cur.pos = before_sep;  // the '-' belonged to something else
    cur.skip_spaces();
  }

  const UnitInfo* unit = parse_unit(cur);
  if (!unit)
    throw QuantityParseError("unrecognized unit in '" + std::string(surface) +
                             "'");
  cur.skip_spaces();
  if (!cur.done())
    throw QuantityParseError("trailing content in '" + std::string(surface) +
                             "'");

  if (unit->kind == QuantityKind::temperature && !unit->celsius) {
    if (*first < 0.0 || (second && *second < 0.0))
      throw QuantityParseError("negative kelvin value in '" +
                               std::string(surface) + "'");
  }

  Quantity q;
  q.kind = unit->kind;
  q.qualifier = qualifier;
  q.unit = utf8::encode(unit->spelling);
  if (second && *second < *first) std::swap(*first, *second);
  q.value = *first;
  q.normalized = normalize(*first, *unit);
  if (second) {
    q.value_high = *second;
    q.normalized_high = normalize(*second, *unit);
  }
  if (!std::isfinite(q.normalized))
    throw QuantityParseError("non-finite normalized value");
  return q;
}

std::optional<Quantity> try_parse_quantity(std::string_view surface) {
  try {
    return parse_quantity(surface);
  } catch (const QuantityParseError&) {
    return std::nullopt;
  }
}

std::vector<QuantityMatch> scan_quantities(const std::u32string& text) {
  std::vector<QuantityMatch> matches;
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t c = text[i];
    bool candidate_start =
        utf8::is_ascii_digit(c) || utf8::is_letter(c) || c == U'~' ||
        c == 0x2248 || c == 0x223C || c == U'>' || c == U'<' || c == 0x2265 ||
        c == 0x2264;
    bool bounded = i == 0 || !(utf8::is_letter(text[i - 1]) ||
                               utf8::is_ascii_digit(text[i - 1]));
    if (!candidate_start || !bounded) {
      ++i;
      continue;
    }

    Cursor cur{text, i};
    Qualifier qualifier = parse_qualifier(cur);
    if (qualifier != Qualifier::none) cur.skip_spaces();
    std::size_t number_start = cur.pos;
    std::optional<double> first = parse_number(cur);
    if (!first || (qualifier == Qualifier::none && number_start != i)) {
      ++i;
      continue;
    }
    std::size_t after_first = cur.pos;
    cur.skip_spaces();
    std::size_t before_sep = cur.pos;
    std::size_t after_second = after_first;
    if (try_range_separator(cur)) {
      cur.skip_spaces();
      if (parse_number(cur))
        after_second = cur.pos;
      else
        cur.pos = before_sep;
    } else {
      cur.pos = before_sep;
    }
    cur.skip_spaces();
    const UnitInfo* unit = parse_unit(cur);
    if (!unit) {
      // retry without the range extension: "1-2 of 3 K" style ambiguity
      if (after_second != after_first) {
        cur.pos = after_first;
        cur.skip_spaces();
        unit = parse_unit(cur);
      }
      if (!unit) {
        i = after_first;
        continue;
      }
    }

    Span span{static_cast<std::int32_t>(i),
              static_cast<std::int32_t>(cur.pos)};
    std::string surface =
        utf8::encode(std::u32string_view(text).substr(i, cur.pos - i));
    if (auto quantity = try_parse_quantity(surface)) {
      matches.push_back(QuantityMatch{span, *quantity});
      i = cur.pos;
    } else {
      i = after_first;
    }
  }
  return matches;
}

}  // namespace supercon
