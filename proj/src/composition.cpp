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

#include "supercon/composition.hpp"

#include <cmath>
#include <set>

#include "supercon/elements.hpp"
#include "supercon/utf8.hpp"

namespace supercon {

Stoich Stoich::one() { return from_decimal(Decimal::from_int(1)); }

Stoich Stoich::from_decimal(Decimal value) {
  Stoich s;
  s.terms.push_back(StoichTerm{1, true, value, {}});
  return s;
}

bool Stoich::is_numeric() const {
  for (const StoichTerm& term : terms)
    if (!term.is_number) return false;
  return true;
}

bool Stoich::is_one() const {
  return is_numeric() && numeric_value() == Decimal::from_int(1);
}

Decimal Stoich::numeric_value() const {
  Decimal total;
  for (const StoichTerm& term : terms) {
    Decimal signed_value = term.sign < 0 ? -term.number : term.number;
    total = total + signed_value;
  }
  return total;
}

std::string Stoich::render() const {
  if (is_numeric()) return numeric_value().to_string();
  std::string out;
  bool first = true;
  for (const StoichTerm& term : terms) {
    if (term.sign < 0)
      out += '-';
    else if (!first)
      out += '+';
    out += term.is_number ? term.number.to_string() : term.variable;
    first = false;
  }
  return out;
}

Stoich Stoich::substitute(
    const std::map<std::string, Decimal>& assignment) const {
  Decimal numeric_part;
  bool any_number = false;
  std::vector<StoichTerm> symbolic;
  for (const StoichTerm& term : terms) {
    if (term.is_number) {
      numeric_part = numeric_part + (term.sign < 0 ? -term.number : term.number);
      any_number = true;
      continue;
    }
    auto hit = assignment.find(term.variable);
    if (hit != assignment.end()) {
      numeric_part =
          numeric_part + (term.sign < 0 ? -hit->second : hit->second);
      any_number = true;
    } else {
      symbolic.push_back(term);
    }
  }
  Stoich out;
  if (any_number || symbolic.empty())
    out.terms.push_back(StoichTerm{1, true, numeric_part, {}});
  for (StoichTerm& term : symbolic) out.terms.push_back(term);
  // Keep "x" rendering as "x", not "0+x".
  if (!symbolic.empty() && any_number &&
      numeric_part == Decimal::from_int(0) && out.terms.front().is_number)
    out.terms.erase(out.terms.begin());
  return out;
}

std::optional<Decimal> Stoich::evaluate(
    const std::map<std::string, Decimal>& assignment) const {
  Stoich substituted = substitute(assignment);
  if (!substituted.is_numeric()) return std::nullopt;
  return substituted.numeric_value();
}

Stoich Stoich::plus(const Stoich& other) const {
  if (is_numeric() && other.is_numeric())
    return from_decimal(numeric_value() + other.numeric_value());
  Stoich out = *this;
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

bool Composition::resolved() const {
  for (const CompositionEntry& entry : entries) {
    if (entry.site_is_variable) return false;
    if (!is_element_symbol(entry.site)) return false;
    if (!entry.stoich.is_numeric()) return false;
  }
  return true;
}

const CompositionEntry* Composition::find(std::string_view site) const {
  for (const CompositionEntry& entry : entries)
    if (entry.site == site) return &entry;
  return nullptr;
}

bool Composition::numerically_equal(const Composition& other,
                                    double tol) const {
  if (!resolved() || !other.resolved()) return false;
  if (entries.size() != other.entries.size()) return false;
  for (const CompositionEntry& entry : entries) {
    const CompositionEntry* match = other.find(entry.site);
    if (!match) return false;
    double a = entry.stoich.numeric_value().to_double();
    double b = match->stoich.numeric_value().to_double();
    if (std::fabs(a - b) > tol) return false;
  }
  return true;
}

namespace {

// Lowercase letters allowed as expression variables, plus δ.
bool is_expr_variable(char32_t cp) {
  return cp == U'x' || cp == U'y' || cp == U'z' || cp == U'w' || cp == U'u' ||
         cp == U'v' || cp == 0x03B4;  // δ
}

// Multi-letter site placeholders common in materials text.
const std::vector<std::u32string>& multi_letter_variables() {
  static const std::vector<std::u32string> names = {U"RE", U"Ln", U"AE",
                                                    U"TM", U"TR"};
  return names;
}

struct FormulaScanner {
  std::u32string text;
  std::size_t pos = 0;

  explicit FormulaScanner(std::string_view formula) {
    for (char32_t cp : utf8::decode(formula)) {
      if (utf8::is_space(cp)) continue;
      if (cp == 0x2212) cp = U'-';                       // unicode minus
      if (cp >= 0x2080 && cp <= 0x2089) cp = U'0' + (cp - 0x2080);  // subscripts
      text.push_back(cp);
    }
  }

  bool done() const { return pos >= text.size(); }
  char32_t peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : U'\0';
  }

  [[noreturn]] void fail(const std::string& reason) const {
    // Report the maximal token at the current position for diagnostics.
    std::size_t end = pos;
    while (end < text.size() && !utf8::is_space(text[end]) &&
           (utf8::is_letter(text[end]) || utf8::is_ascii_digit(text[end]) ||
            text[end] == U'.'))
      ++end;
    if (end == pos) end = pos + 1;
    std::string token = utf8::encode(
        std::u32string_view(text).substr(pos, end - pos));
    throw DecompositionError(reason + ": '" + token + "'", token);
  }

  std::optional<Decimal> scan_number() {
    std::size_t start = pos;
    std::u32string digits;
    bool point = false;
    while (!done()) {
      char32_t c = peek();
      if (utf8::is_ascii_digit(c)) {
        digits += c;
        ++pos;
      } else if (c == U'.' && !point && utf8::is_ascii_digit(peek(1))) {
        point = true;
        digits += c;
        ++pos;
      } else {
        break;
      }
    }
    if (digits.empty()) {
      pos = start;
      return std::nullopt;
    }
    auto value = Decimal::parse(utf8::encode(digits));
    if (!value) fail("unreadable number");
    return value;
  }

  // site := two-letter element | multi-letter variable | one-letter
  // element | one-letter uppercase placeholder
  std::optional<std::pair<std::string, bool>> scan_site() {
    char32_t c = peek();
    if (!(c >= U'A' && c <= U'Z')) return std::nullopt;
    if (peek(1) >= U'a' && peek(1) <= U'z') {
      std::string two = utf8::encode(c) + utf8::encode(peek(1));
      if (is_element_symbol(two)) {
        pos += 2;
        return std::make_pair(two, false);
      }
    }
    for (const std::u32string& name : multi_letter_variables()) {
      if (text.compare(pos, name.size(), name) == 0) {
        char32_t next = peek(name.size());
        if (!(next >= U'a' && next <= U'z')) {
          pos += name.size();
          return std::make_pair(utf8::encode(name), true);
        }
      }
    }
    std::string one = utf8::encode(c);
    ++pos;
    return std::make_pair(one, !is_element_symbol(one));
  }

  // expr := item (('+'|'-') item)*, item := number | expression variable.
  // A '-' not followed by an item is a site separator, not arithmetic.
  std::optional<Stoich> scan_stoich() {
    Stoich stoich;
    int sign = 1;
    bool first = true;
    while (true) {
      if (auto number = scan_number()) {
        stoich.terms.push_back(StoichTerm{sign, true, *number, {}});
      } else if (is_expr_variable(peek())) {
        stoich.terms.push_back(
            StoichTerm{sign, false, Decimal{}, utf8::encode(peek())});
        ++pos;
      } else {
        if (first) return std::nullopt;
        fail("dangling operator in stoichiometry");
      }
      first = false;
      char32_t c = peek();
      if (c == U'+' || c == U'-') {
        char32_t after = peek(1);
        if (utf8::is_ascii_digit(after) || is_expr_variable(after)) {
          sign = c == U'-' ? -1 : 1;
          ++pos;
          continue;
        }
      }
      // keep all-numeric expressions in the single-term normal form so
      // rendering and re-parsing agree
      if (stoich.is_numeric() && stoich.terms.size() > 1)
        stoich = Stoich::from_decimal(stoich.numeric_value());
      return stoich;
    }
  }
};

}  // namespace

Composition decompose_formula(std::string_view formula) {
  FormulaScanner scanner(formula);
  if (scanner.done())
    throw DecompositionError("empty formula", std::string(formula));

  Composition composition;
  while (!scanner.done()) {
    char32_t c = scanner.peek();
    if (c == U'-' || c == 0x00B7 || c == 0x2022) {  // separators: - · •
      ++scanner.pos;
      continue;
    }
    if (utf8::is_ascii_digit(c))
      scanner.fail("stoichiometry with no preceding element");
    auto site = scanner.scan_site();
    if (!site) scanner.fail("expected element symbol or variable");
    Stoich stoich = scanner.scan_stoich().value_or(Stoich::one());
    if (stoich.is_numeric() && stoich.numeric_value().is_negative())
      throw DecompositionError(
          "negative stoichiometry for '" + site->first + "'", site->first);

    bool merged = false;
    for (CompositionEntry& entry : composition.entries) {
      if (entry.site == site->first &&
          entry.site_is_variable == site->second) {
        entry.stoich = entry.stoich.plus(stoich);
        merged = true;
        break;
      }
    }
    if (!merged)
      composition.entries.push_back(
          CompositionEntry{site->first, site->second, stoich});
  }
  return composition;
}

std::optional<Composition> try_decompose_formula(std::string_view formula) {
  try {
    return decompose_formula(formula);
  } catch (const DecompositionError&) {
    return std::nullopt;
  }
}

std::optional<Stoich> parse_stoich(std::string_view text) {
  try {
    FormulaScanner scanner(text);
    // Leading '-' is arithmetic here, unlike inside a formula.
    int leading_sign = 1;
    if (scanner.peek() == U'-') {
      leading_sign = -1;
      ++scanner.pos;
    }
    auto stoich = scanner.scan_stoich();
    if (!stoich || !scanner.done()) return std::nullopt;
    if (leading_sign < 0 && !stoich->terms.empty())
      stoich->terms.front().sign = -stoich->terms.front().sign;
    return stoich;
  } catch (const DecompositionError&) {
    return std::nullopt;
  }
}

std::string render_formula(const Composition& composition) {
  std::string out;
  for (const CompositionEntry& entry : composition.entries) {
    out += entry.site;
    if (!entry.stoich.is_one()) out += entry.stoich.render();
  }
  return out;
}

}  // namespace supercon
