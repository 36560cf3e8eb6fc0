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

#include "supercon/material.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "supercon/elements.hpp"
#include "supercon/utf8.hpp"

namespace supercon {

namespace {

bool is_token_char(char32_t cp) {
  return utf8::is_letter(cp) || utf8::is_ascii_digit(cp) || cp == U'%' ||
         cp == U'\'';
}

struct SurfaceScanner {
  std::u32string raw;
  std::u32string folded;
  std::vector<bool> claimed;

  explicit SurfaceScanner(std::string_view surface)
      : raw(utf8::decode(surface)),
        folded(utf8::fold(raw)),
        claimed(raw.size(), false) {}

  bool free_range(std::size_t start, std::size_t end) const {
    for (std::size_t i = start; i < end; ++i)
      if (claimed[i]) return false;
    return true;
  }

  void claim(std::size_t start, std::size_t end) {
    for (std::size_t i = start; i < end; ++i) claimed[i] = true;
  }

  bool boundary_before(std::size_t i) const {
    return i == 0 || !is_token_char(raw[i - 1]);
  }

  bool boundary_after(std::size_t i) const {
    return i >= raw.size() || !is_token_char(raw[i]);
  }

  FieldSlice slice(std::size_t start, std::size_t end) const {
    return FieldSlice{
        utf8::encode(std::u32string_view(raw).substr(start, end - start)),
        Span{static_cast<std::int32_t>(start),
             static_cast<std::int32_t>(end)}};
  }

  // Finds the leftmost unclaimed, word-bounded occurrence of a folded
  // phrase at or after `from`; words in the phrase match across single
  // runs of whitespace.
  std::optional<Span> find_phrase(std::u32string_view phrase,
                                  std::size_t from = 0) const {
    for (std::size_t start = from; start < folded.size(); ++start) {
      if (claimed[start] || !boundary_before(start)) continue;
      std::size_t i = start;
      std::size_t j = 0;
      while (j < phrase.size() && i < folded.size() && !claimed[i]) {
        if (utf8::is_space(phrase[j])) {
          if (!utf8::is_space(folded[i])) break;
          while (i < folded.size() && utf8::is_space(folded[i])) ++i;
          ++j;
          continue;
        }
        if (folded[i] != phrase[j]) break;
        ++i;
        ++j;
      }
      if (j == phrase.size() && boundary_after(i))
        return Span{static_cast<std::int32_t>(start),
                    static_cast<std::int32_t>(i)};
    }
    return std::nullopt;
  }
};

bool is_variable_name(std::u32string_view token) {
  if (token.empty() || token.size() > 3) return false;
  for (char32_t cp : token)
    if (!utf8::is_letter(cp)) return false;
  return true;
}

bool is_value_token(std::u32string_view token) {
  if (token.empty()) return false;
  for (char32_t cp : token)
    if (!(utf8::is_letter(cp) || utf8::is_ascii_digit(cp) || cp == U'.'))
      return false;
  return true;
}

std::u32string strip_u32(std::u32string_view text) {
  std::size_t a = 0;
  std::size_t b = text.size();
  while (a < b && utf8::is_space(text[a])) ++a;
  while (b > a && utf8::is_space(text[b - 1])) --b;
  return std::u32string(text.substr(a, b - a));
}

// Parses "A=Mg,Co; x=0.1,0.2" style assignment bodies. Returns false if
// the body is not an assignment list.
bool parse_assignment_body(std::u32string_view body,
                           std::vector<std::pair<std::string,
                                                 std::vector<std::string>>>*
                               out) {
  std::vector<std::u32string> chunks;
  std::u32string current;
  for (char32_t cp : body) {
    if (cp == U';' || cp == U',') {
      chunks.push_back(current);
      current.clear();
    } else {
      current += cp;
    }
  }
  chunks.push_back(current);

  bool any = false;
  std::string open_var;
  for (std::u32string& chunk : chunks) {
    std::u32string trimmed = strip_u32(chunk);
    if (trimmed.empty()) continue;
    auto eq = trimmed.find(U'=');
    if (eq != std::u32string::npos) {
      std::u32string var = strip_u32(trimmed.substr(0, eq));
      std::u32string value = strip_u32(trimmed.substr(eq + 1));
      if (!is_variable_name(var)) return false;
      open_var = utf8::encode(var);
      out->emplace_back(open_var, std::vector<std::string>{});
      if (!value.empty()) {
        if (!is_value_token(value)) return false;
        out->back().second.push_back(utf8::encode(value));
      }
      any = true;
    } else {
      if (open_var.empty() || !is_value_token(trimmed)) return false;
      out->back().second.push_back(utf8::encode(trimmed));
    }
  }
  return any;
}

const std::vector<std::u32string>& shape_terms() {
  static const std::vector<std::u32string> terms = {
      U"single crystals", U"single crystal", U"polycrystalline samples",
      U"polycrystalline", U"polycrystals",   U"polycrystal",
      U"thin films",      U"thin film",      U"nanowires",
      U"nanowire",        U"films",          U"film",
      U"powders",         U"powder",         U"wires",
      U"wire",            U"whiskers",       U"whisker",
      U"ribbons",         U"ribbon",         U"tapes",
      U"tape",            U"pellets",        U"pellet",
      U"ceramics",        U"ceramic",        U"monolayers",
      U"monolayer",       U"crystals",       U"crystal",
      U"foils",           U"foil",           U"flakes",
      U"flake"};
  return terms;
}

const std::vector<std::u32string>& doping_terms() {
  static const std::vector<std::u32string> terms = {
      U"optimally doped", U"heavily doped", U"lightly doped", U"overdoped",
      U"underdoped",      U"undoped",       U"pristine",      U"bulk",
      U"pure"};
  return terms;
}

const std::set<std::u32string>& name_stopwords() {
  static const std::set<std::u32string> words = {
      U"and", U"or", U"of", U"with", U"the", U"a",  U"an",
      U"in",  U"at", U"by", U"for",  U"to",  U"as", U"from"};
  return words;
}

// Words before "-doped" that mark fabrication notes rather than dopants.
bool is_carrier_word(std::u32string_view word) {
  return word == U"electron" || word == U"hole" || word == U"carrier";
}

bool all_caps_acronym(std::u32string_view token) {
  if (token.size() < 3) return false;
  for (char32_t cp : token)
    if (!(cp >= U'A' && cp <= U'Z')) return false;
  return true;
}

bool formula_worthy(const Composition& composition, std::u32string_view raw) {
  if (composition.entries.empty()) return false;
  if (composition.entries.size() >= 2) return true;
  for (char32_t cp : raw)
    if (utf8::is_ascii_digit(cp)) return true;
  for (const CompositionEntry& entry : composition.entries)
    if (entry.site_is_variable || !entry.stoich.is_numeric()) return true;
  return false;
}

struct TokenRef {
  std::size_t start;
  std::size_t end;
};

// All doping-phrase matches over the unclaimed text, leftmost first:
// [N%] word{-| }doped/doping/codoped, bare "N% El", standalone terms.
// Carrier-type phrases (electron-doped) are excluded.
std::vector<Span> doping_candidates(const SurfaceScanner& scanner) {
  const std::size_t n = scanner.raw.size();
  std::vector<Span> found;
  for (std::size_t i = 0; i < n; ++i) {
    if (scanner.claimed[i] || !scanner.boundary_before(i)) continue;
    std::size_t p = i;
    std::size_t start = i;
    std::size_t digits = p;
    while (digits < n && !scanner.claimed[digits] &&
           (utf8::is_ascii_digit(scanner.raw[digits]) ||
            scanner.raw[digits] == U'.'))
      ++digits;
    bool has_percent = false;
    if (digits > p && digits < n && scanner.raw[digits] == U'%') {
      has_percent = true;
      p = digits + 1;
      while (p < n && utf8::is_space(scanner.raw[p])) ++p;
    }
    std::size_t word_start = p;
    while (p < n && !scanner.claimed[p] && utf8::is_letter(scanner.raw[p]))
      ++p;
    if (p == word_start) continue;
    std::u32string word = utf8::fold(
        std::u32string_view(scanner.raw).substr(word_start, p - word_start));
    bool carrier = is_carrier_word(word);
    std::size_t q = p;
    if (q < n && (scanner.raw[q] == U'-' || utf8::is_space(scanner.raw[q]))) {
      std::size_t r = q + 1;
      while (r < n && utf8::is_space(scanner.raw[r])) ++r;
      for (std::u32string_view suffix : {U"codoped", U"doped", U"doping"}) {
        if (scanner.folded.compare(r, suffix.size(), suffix) == 0 &&
            scanner.boundary_after(r + suffix.size()) &&
            scanner.free_range(start, r + suffix.size())) {
          if (!carrier)
            found.push_back(
                Span{static_cast<std::int32_t>(start),
                     static_cast<std::int32_t>(r + suffix.size())});
          break;
        }
      }
    }
    if (!found.empty() &&
        found.back().start == static_cast<std::int32_t>(start))
      continue;
    if (has_percent && !carrier &&
        is_element_symbol(utf8::encode(
            std::u32string_view(scanner.raw)
                .substr(word_start, p - word_start))) &&
        scanner.boundary_after(p) && scanner.free_range(start, p)) {
      found.push_back(Span{static_cast<std::int32_t>(start),
                           static_cast<std::int32_t>(p)});
    }
  }
  for (const std::u32string& term : doping_terms()) {
    std::size_t from = 0;
    while (auto span = scanner.find_phrase(term, from)) {
      found.push_back(*span);
      from = span->end;
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Span> shape_candidates(const SurfaceScanner& scanner) {
  std::vector<Span> found;
  for (const std::u32string& term : shape_terms()) {
    std::size_t from = 0;
    while (auto span = scanner.find_phrase(term, from)) {
      bool covered = false;
      for (const Span& prior : found)
        if (prior.contains(*span)) covered = true;
      if (!covered) found.push_back(*span);
      from = span->end;
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

MaterialStructure parse_material(std::string_view surface) {
  MaterialStructure out;
  out.raw = std::string(surface);
  SurfaceScanner scanner(surface);
  const std::size_t n = scanner.raw.size();

  // 1. Variable assignment blocks: "(A=Mg,Co; x=0.1,0.2)".
  for (std::size_t i = 0; i < n; ++i) {
    if (scanner.raw[i] != U'(') continue;
    int depth = 1;
    std::size_t close = i + 1;
    while (close < n && depth > 0) {
      if (scanner.raw[close] == U'(') ++depth;
      if (scanner.raw[close] == U')') --depth;
      if (depth == 0) break;
      ++close;
    }
    if (close >= n) break;
    std::vector<std::pair<std::string, std::vector<std::string>>> parsed;
    if (parse_assignment_body(
            std::u32string_view(scanner.raw).substr(i + 1, close - i - 1),
            &parsed)) {
      for (auto& [var, values] : parsed) {
        auto& list = out.variables[var];
        if (!list.empty()) {
          out.notes.push_back("variable '" + var +
                              "' defined more than once; values merged");
        }
        for (auto& value : values)
          if (std::find(list.begin(), list.end(), value) == list.end())
            list.push_back(value);
      }
      scanner.claim(i, close + 1);
      i = close;
    }
  }

  // 2. Substrate: "... onto X" / "... on X" claims the tail.
  for (std::u32string_view word : {U"onto", U"on"}) {
    auto span = scanner.find_phrase(word);
    if (!span) continue;
    std::size_t tail = span->end;
    while (tail < n && utf8::is_space(scanner.raw[tail])) ++tail;
    if (tail >= n || scanner.claimed[tail]) continue;
    std::size_t stop = tail;
    while (stop < n && !scanner.claimed[stop]) ++stop;
    while (stop > tail && utf8::is_space(scanner.raw[stop - 1])) --stop;
    out.substrate = scanner.slice(tail, stop);
    scanner.claim(span->start, stop);
    break;
  }

  // 3. Doping: "2% Zn-doped", "Zn-doped", "overdoped", "1% Zn" ...
  {
    auto candidates = doping_candidates(scanner);
    if (!candidates.empty()) {
      out.doping = scanner.slice(candidates[0].start, candidates[0].end);
      scanner.claim(candidates[0].start, candidates[0].end);
    }
  }

  // 4. Shape.
  {
    auto candidates = shape_candidates(scanner);
    if (!candidates.empty()) {
      out.shape = scanner.slice(candidates[0].start, candidates[0].end);
      scanner.claim(candidates[0].start, candidates[0].end);
    }
  }

  // 5. Name / formula from the remaining regions. A region is tried as a
  // whole first so spaced formulas ("La 4 Fe 2 A 1-x O 7") stay together.
  auto doping_like = [](std::u32string_view folded_token) {
    for (std::u32string_view suffix : {U"doped", U"doping", U"codoped"})
      if (folded_token.size() >= suffix.size() &&
          folded_token.substr(folded_token.size() - suffix.size()) == suffix)
        return true;
    return false;
  };
  auto classify_token = [&](std::size_t start, std::size_t end) {
    while (start < end && !is_token_char(scanner.raw[start]) &&
           scanner.raw[start] != U'(')
      ++start;
    while (end > start && !is_token_char(scanner.raw[end - 1]) &&
           scanner.raw[end - 1] != U')')
      --end;
    // strip matched outer parens: "(YBCO)"
    while (end - start >= 2 && scanner.raw[start] == U'(' &&
           scanner.raw[end - 1] == U')') {
      ++start;
      --end;
    }
    if (start >= end) return;
    std::u32string_view token =
        std::u32string_view(scanner.raw).substr(start, end - start);
    std::string token_utf8 = utf8::encode(token);
    std::u32string folded = utf8::fold(std::u32string(token));
    if (doping_like(folded)) return;  // "electron-doped" -> fabrication
    if (all_caps_acronym(token)) {
      if (!out.name) {
        out.name = scanner.slice(start, end);
        scanner.claim(start, end);
      }
      return;  // acronyms never count as formulas
    }
    if (!out.formula) {
      bool exact_element = is_element_symbol(token_utf8);
      auto composition = try_decompose_formula(token_utf8);
      if (exact_element ||
          (composition && formula_worthy(*composition, token))) {
        out.formula = scanner.slice(start, end);
        scanner.claim(start, end);
        return;
      }
    }
    if (!out.name && utf8::is_letter(token[0]) &&
        !name_stopwords().count(folded)) {
      out.name = scanner.slice(start, end);
      scanner.claim(start, end);
    }
  };

  std::size_t region_start = 0;
  while (region_start < n) {
    while (region_start < n && (scanner.claimed[region_start] ||
                                utf8::is_space(scanner.raw[region_start])))
      ++region_start;
    if (region_start >= n) break;
    std::size_t region_end = region_start;
    while (region_end < n && !scanner.claimed[region_end]) ++region_end;
    std::size_t trimmed_end = region_end;
    while (trimmed_end > region_start &&
           utf8::is_space(scanner.raw[trimmed_end - 1]))
      --trimmed_end;

    std::u32string_view region = std::u32string_view(scanner.raw)
                                     .substr(region_start,
                                             trimmed_end - region_start);
    std::string region_utf8 = utf8::encode(region);
    bool handled = false;
    if (all_caps_acronym(region)) {
      if (!out.name) {
        out.name = scanner.slice(region_start, trimmed_end);
        scanner.claim(region_start, trimmed_end);
      }
      handled = true;
    } else if (!out.formula) {
      auto composition = try_decompose_formula(region_utf8);
      if (composition && formula_worthy(*composition, region)) {
        out.formula = scanner.slice(region_start, trimmed_end);
        scanner.claim(region_start, trimmed_end);
        handled = true;
      }
    }
    if (!handled) {
      // token-wise fallback inside the region
      std::size_t t = region_start;
      while (t < trimmed_end) {
        while (t < trimmed_end && utf8::is_space(scanner.raw[t])) ++t;
        if (t >= trimmed_end) break;
        std::size_t e = t;
        while (e < trimmed_end && !utf8::is_space(scanner.raw[e])) ++e;
        classify_token(t, e);
        t = e;
      }
    }
    region_start = region_end;
  }

  // 6. Fabrication: everything still unclaimed.
  {
    std::vector<TokenRef> leftovers;
    std::size_t t = 0;
    while (t < n) {
      while (t < n && (scanner.claimed[t] || utf8::is_space(scanner.raw[t])))
        ++t;
      if (t >= n) break;
      std::size_t e = t;
      while (e < n && !scanner.claimed[e] && !utf8::is_space(scanner.raw[e]))
        ++e;
      bool has_content = false;
      for (std::size_t k = t; k < e; ++k)
        if (is_token_char(scanner.raw[k])) has_content = true;
      if (has_content) leftovers.push_back(TokenRef{t, e});
      t = e;
    }
    if (!leftovers.empty()) {
      std::string text;
      for (std::size_t k = 0; k < leftovers.size(); ++k) {
        if (k) text += ' ';
        text += utf8::encode(std::u32string_view(scanner.raw)
                                 .substr(leftovers[k].start,
                                         leftovers[k].end - leftovers[k].start));
      }
      out.fabrication = FieldSlice{
          text, Span{static_cast<std::int32_t>(leftovers.front().start),
                     static_cast<std::int32_t>(leftovers.back().end)}};
    }
  }

  out.low_confidence = !out.name && !out.formula;
  return out;
}

bool is_variable_assignment_block(std::string_view text) {
  std::u32string decoded = strip_u32(utf8::decode(text));
  if (decoded.size() < 2 || decoded.front() != U'(' || decoded.back() != U')')
    return false;
  std::vector<std::pair<std::string, std::vector<std::string>>> parsed;
  return parse_assignment_body(
      std::u32string_view(decoded).substr(1, decoded.size() - 2), &parsed);
}

std::vector<Span> find_doping_phrases(std::string_view text) {
  SurfaceScanner scanner(text);
  return doping_candidates(scanner);
}

std::vector<Span> find_shape_terms(std::string_view text) {
  SurfaceScanner scanner(text);
  return shape_candidates(scanner);
}

std::vector<ResolvedFormula> substitute_variables(
    const MaterialStructure& structure) {
  if (!structure.formula || structure.variables.empty()) return {};
  auto parent = try_decompose_formula(structure.formula->text);
  if (!parent) return {};

  std::set<std::string> in_formula;
  for (const CompositionEntry& entry : parent->entries) {
    if (entry.site_is_variable) in_formula.insert(entry.site);
    for (const StoichTerm& term : entry.stoich.terms)
      if (!term.is_number) in_formula.insert(term.variable);
  }

  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  for (const auto& [var, values] : structure.variables)
    if (in_formula.count(var) && !values.empty()) axes.emplace_back(var, values);
  if (axes.empty()) return {};

  std::vector<std::size_t> odometer(axes.size(), 0);
  std::vector<ResolvedFormula> out;
  while (true) {
    std::map<std::string, std::string> assignment;
    std::map<std::string, Decimal> numbers;
    std::map<std::string, std::string> sites;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const std::string& value = axes[i].second[odometer[i]];
      assignment[axes[i].first] = value;
      if (auto d = Decimal::parse(value))
        numbers[axes[i].first] = *d;
      else
        sites[axes[i].first] = value;
    }

    Composition resolved;
    for (const CompositionEntry& entry : parent->entries) {
      CompositionEntry substituted = entry;
      if (substituted.site_is_variable) {
        auto hit = sites.find(substituted.site);
        if (hit != sites.end()) {
          substituted.site = hit->second;
          substituted.site_is_variable = !is_element_symbol(hit->second);
        }
      }
      substituted.stoich = substituted.stoich.substitute(numbers);
      resolved.entries.push_back(std::move(substituted));
    }
    out.push_back(ResolvedFormula{render_formula(resolved), resolved,
                                  std::move(assignment)});

    // odometer increment, rightmost axis fastest
    std::size_t axis = axes.size();
    while (axis > 0) {
      --axis;
      if (++odometer[axis] < axes[axis].second.size()) break;
      odometer[axis] = 0;
      if (axis == 0) return out;
    }
  }
}

NameLookup NameLookup::parse(std::string_view content) {
  NameLookup lookup;
  std::istringstream stream{std::string(content)};
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string key = line.substr(0, tab);
    std::string value = line.substr(tab + 1);
    if (!value.empty() && value.back() == '\r') value.pop_back();
    std::u32string folded = utf8::fold(utf8::decode(key));
    lookup.entries_[utf8::encode(folded)] = value;
  }
  return lookup;
}

NameLookup NameLookup::load(const std::string& path) {
  std::ifstream file(path);
  if (!file)
    throw std::runtime_error("cannot open name lookup file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str());
}

std::optional<std::string> NameLookup::find(std::string_view name) const {
  std::u32string folded = utf8::fold(strip_u32(utf8::decode(name)));
  auto hit = entries_.find(utf8::encode(folded));
  if (hit == entries_.end()) return std::nullopt;
  return hit->second;
}

// ---------------------------------------------------------------------------
// Taxonomy rules

struct TaxonomyRules::Node {
  enum class Kind {
    element,
    element_stoich,
    metals_only,
    min_elements,
    and_,
    or_,
    not_
  };
  Kind kind;
  std::string symbol;
  double number = 0.0;
  int count = 0;
  std::vector<std::shared_ptr<Node>> children;
};

namespace {

using Node = TaxonomyRules::Node;

struct RuleTokenizer {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  }

  std::optional<std::string> next() {
    skip();
    if (pos >= text.size()) return std::nullopt;
    char c = text[pos];
    if (c == '(' || c == ')' || c == '&' || c == '|' || c == '!' ||
        c == ':') {
      ++pos;
      return std::string(1, c);
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != '&' &&
           text[pos] != '|' && text[pos] != '!' && text[pos] != ':')
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::optional<std::string> peek() {
    std::size_t save = pos;
    auto token = next();
    pos = save;
    return token;
  }
};

std::shared_ptr<Node> parse_or(RuleTokenizer& lexer);

std::shared_ptr<Node> parse_atom(RuleTokenizer& lexer) {
  auto token = lexer.next();
  if (!token) throw std::runtime_error("taxonomy rule: unexpected end");
  if (*token == "!") {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::not_;
    node->children.push_back(parse_atom(lexer));
    return node;
  }
  if (*token == "(") {
    auto inner = parse_or(lexer);
    auto close = lexer.next();
    if (!close || *close != ")")
      throw std::runtime_error("taxonomy rule: missing ')'");
    return inner;
  }
  if (*token == "metals-only") {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::metals_only;
    return node;
  }
  if (token->rfind("elements>=", 0) == 0) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::min_elements;
    node->count = std::stoi(token->substr(10));
    return node;
  }
  if (!is_element_symbol(*token))
    throw std::runtime_error("taxonomy rule: unknown atom '" + *token + "'");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::element;
  node->symbol = *token;
  if (auto peeked = lexer.peek(); peeked && *peeked == ":") {
    lexer.next();
    auto number = lexer.next();
    if (!number)
      throw std::runtime_error("taxonomy rule: missing stoichiometry");
    node->kind = Node::Kind::element_stoich;
    node->number = std::stod(*number);
  }
  return node;
}

std::shared_ptr<Node> parse_and(RuleTokenizer& lexer) {
  auto left = parse_atom(lexer);
  while (auto token = lexer.peek()) {
    if (*token != "&") break;
    lexer.next();
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::and_;
    node->children = {left, parse_atom(lexer)};
    left = node;
  }
  return left;
}

std::shared_ptr<Node> parse_or(RuleTokenizer& lexer) {
  auto left = parse_and(lexer);
  while (auto token = lexer.peek()) {
    if (*token != "|") break;
    lexer.next();
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::or_;
    node->children = {left, parse_and(lexer)};
    left = node;
  }
  return left;
}

bool entry_present(const CompositionEntry& entry) {
  if (entry.site_is_variable) return false;
  if (!entry.stoich.is_numeric()) return true;
  return entry.stoich.numeric_value().to_double() > 1e-9;
}

bool eval_node(const Node& node, const Composition& composition) {
  switch (node.kind) {
    case Node::Kind::element: {
      const CompositionEntry* entry = composition.find(node.symbol);
      return entry && entry_present(*entry);
    }
    case Node::Kind::element_stoich: {
      const CompositionEntry* entry = composition.find(node.symbol);
      if (!entry || entry->site_is_variable || !entry->stoich.is_numeric())
        return false;
      return std::abs(entry->stoich.numeric_value().to_double() -
                      node.number) <= 1e-9;
    }
    case Node::Kind::metals_only: {
      int present = 0;
      for (const CompositionEntry& entry : composition.entries) {
        if (entry.site_is_variable) return false;
        if (!entry_present(entry)) continue;
        if (!is_metal(entry.site)) return false;
        ++present;
      }
      return present > 0;
    }
    case Node::Kind::min_elements: {
      int present = 0;
      for (const CompositionEntry& entry : composition.entries)
        if (entry_present(entry)) ++present;
      return present >= node.count;
    }
    case Node::Kind::and_:
      return eval_node(*node.children[0], composition) &&
             eval_node(*node.children[1], composition);
    case Node::Kind::or_:
      return eval_node(*node.children[0], composition) ||
             eval_node(*node.children[1], composition);
    case Node::Kind::not_:
      return !eval_node(*node.children[0], composition);
  }
  return false;
}

}  // namespace

TaxonomyRules TaxonomyRules::parse(std::string_view content) {
  TaxonomyRules rules;
  std::istringstream stream{std::string(content)};
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find_first_of("\t");
    if (tab == std::string::npos)
      throw std::runtime_error("taxonomy rule line " +
                               std::to_string(line_number) +
                               ": expected 'tag<TAB>expression'");
    Rule rule;
    rule.tag = line.substr(0, tab);
    RuleTokenizer lexer{std::string_view(line).substr(tab + 1)};
    rule.predicate = parse_or(lexer);
    if (lexer.peek())
      throw std::runtime_error("taxonomy rule line " +
                               std::to_string(line_number) +
                               ": trailing tokens");
    rules.rules_.push_back(std::move(rule));
  }
  return rules;
}

TaxonomyRules TaxonomyRules::load(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open taxonomy file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str());
}

std::vector<std::string> TaxonomyRules::classify(
    const Composition& composition) const {
  std::vector<std::string> tags;
  for (const Rule& rule : rules_) {
    if (!eval_node(*rule.predicate, composition)) continue;
    if (std::find(tags.begin(), tags.end(), rule.tag) == tags.end())
      tags.push_back(rule.tag);
  }
  return tags;
}

std::vector<std::string> classify(const Composition& composition,
                                  const TaxonomyRules& rules) {
  return rules.classify(composition);
}

AnalyzedMaterial analyze_material(std::string_view surface,
                                  const NameLookup& lookup,
                                  const TaxonomyRules& taxonomy) {
  AnalyzedMaterial out;
  out.structure = parse_material(surface);

  std::optional<std::string> formula_text;
  if (out.structure.formula) {
    formula_text = out.structure.formula->text;
  } else if (out.structure.name) {
    formula_text = lookup.find(out.structure.name->text);
  }
  if (formula_text) out.composition = try_decompose_formula(*formula_text);

  if (out.composition) {
    if (!out.structure.variables.empty() && out.structure.formula) {
      for (ResolvedFormula& resolved :
           substitute_variables(out.structure)) {
        if (resolved.composition.resolved())
          out.resolved.push_back(std::move(resolved));
      }
    } else if (out.composition->resolved()) {
      out.resolved.push_back(ResolvedFormula{
          render_formula(*out.composition), *out.composition, {}});
    }
  }

  if (out.composition) {
    std::vector<std::string> tags = taxonomy.classify(*out.composition);
    for (const ResolvedFormula& resolved : out.resolved)
      for (std::string& tag : taxonomy.classify(resolved.composition))
        if (std::find(tags.begin(), tags.end(), tag) == tags.end())
          tags.push_back(tag);
    out.classes = std::move(tags);
  }
  return out;
}

}  // namespace supercon
