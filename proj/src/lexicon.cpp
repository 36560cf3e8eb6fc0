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

#include "supercon/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "supercon/utf8.hpp"

namespace supercon {

std::vector<TextToken> tokenize(const std::u32string& text) {
  std::vector<TextToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (utf8::is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (utf8::is_letter(text[i]) || utf8::is_ascii_digit(text[i])) {
      while (i < text.size() &&
             (utf8::is_letter(text[i]) || utf8::is_ascii_digit(text[i])))
        ++i;
    } else {
      ++i;
    }
    TextToken token;
    token.span = Span{static_cast<std::int32_t>(start),
                      static_cast<std::int32_t>(i)};
    token.text = text.substr(start, i - start);
    token.folded = utf8::fold(token.text);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

void TermMatcher::add(std::string_view phrase, bool case_sensitive,
                      int payload) {
  std::u32string decoded = utf8::decode(phrase);
  Phrase entry;
  entry.case_sensitive = case_sensitive;
  entry.payload = payload;
  entry.term = std::string(phrase);
  for (const TextToken& token : tokenize(decoded))
    entry.tokens.push_back(case_sensitive ? token.text : token.folded);
  if (entry.tokens.empty()) return;
  phrases_.push_back(std::move(entry));
}

std::vector<TermMatcher::Match> TermMatcher::find_all(
    const std::u32string& text) const {
  return find_all(text, tokenize(text));
}

std::vector<TermMatcher::Match> TermMatcher::find_all(
    const std::u32string& text, const std::vector<TextToken>& tokens) const {
  (void)text;
  std::vector<Match> matches;
  for (const Phrase& phrase : phrases_) {
    if (phrase.tokens.size() > tokens.size()) continue;
    for (std::size_t i = 0; i + phrase.tokens.size() <= tokens.size(); ++i) {
      bool hit = true;
      for (std::size_t j = 0; j < phrase.tokens.size(); ++j) {
        const std::u32string& have =
            phrase.case_sensitive ? tokens[i + j].text : tokens[i + j].folded;
        if (have != phrase.tokens[j]) {
          hit = false;
          break;
        }
      }
      if (hit) {
        matches.push_back(Match{
            Span{tokens[i].span.start,
                 tokens[i + phrase.tokens.size() - 1].span.end},
            phrase.payload, phrase.term});
      }
    }
  }
  std::sort(matches.begin(), matches.end(),
            [](const Match& a, const Match& b) {
              if (a.span != b.span) return a.span < b.span;
              return a.payload < b.payload;
            });
  return matches;
}

Lexicon Lexicon::parse(std::string_view content) {
  Lexicon lexicon;
  std::istringstream stream{std::string(content)};
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() < 2)
      throw std::runtime_error("lexicon line " + std::to_string(line_number) +
                               ": expected 'term<TAB>label'");
    auto label = supercon_label_from(fields[1]);
    if (!label)
      throw std::runtime_error("lexicon line " + std::to_string(line_number) +
                               ": unknown label '" + fields[1] + "'");
    bool case_sensitive = false;
    if (fields.size() >= 3) {
      if (fields[2] == "cs")
        case_sensitive = true;
      else if (fields[2] != "ci" && !fields[2].empty())
        throw std::runtime_error("lexicon line " +
                                 std::to_string(line_number) +
                                 ": case flag must be 'cs' or 'ci'");
    }
    lexicon.add_term(fields[0], *label, case_sensitive);
  }
  return lexicon;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open lexicon file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str());
}

void Lexicon::add_term(std::string_view term, SuperconLabel label,
                       bool case_sensitive) {
  for (const Entry& entry : entries_) {
    if (entry.term == term && entry.label != label)
      throw std::runtime_error("lexicon term '" + std::string(term) +
                               "' mapped to two labels: " +
                               std::string(to_string(entry.label)) + " and " +
                               std::string(to_string(label)));
    if (entry.term == term && entry.label == label) return;
  }
  entries_.push_back(Entry{std::string(term), label, case_sensitive});
  matcher_.add(term, case_sensitive, static_cast<int>(label));
}

}  // namespace supercon
