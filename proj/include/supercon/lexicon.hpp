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

#include "supercon/labels.hpp"
#include "supercon/span.hpp"

namespace supercon {

/// Token over decoded text: a run of letters/digits, or one symbol
/// character. Whitespace produces no tokens.
struct TextToken {
  Span span;
  std::u32string text;    // as written
  std::u32string folded;  // lower-cased
};

std::vector<TextToken> tokenize(const std::u32string& text);

/// Multi-word phrase matcher over the token stream. Phrases match token
/// sequences, so "Tc =" finds "Tc =" and "Tc  =" but not "ΔTc =".
class TermMatcher {
 public:
  void add(std::string_view phrase, bool case_sensitive, int payload);

  struct Match {
    Span span;
    int payload;
    std::string term;
  };

  /// All (possibly overlapping) matches, sorted by span.
  std::vector<Match> find_all(const std::u32string& text) const;
  std::vector<Match> find_all(const std::u32string& text,
                              const std::vector<TextToken>& tokens) const;

  bool empty() const { return phrases_.empty(); }

 private:
  struct Phrase {
    std::vector<std::u32string> tokens;  // folded when !case_sensitive
    bool case_sensitive;
    int payload;
    std::string term;
  };
  std::vector<Phrase> phrases_;
};

/// Term lexicon for the baseline tagger: term -> SuperconLabel entries
/// plus built-in surface patterns for quantities and formula-like tokens.
/// File format: one entry per line, "term<TAB>label[<TAB>cs|ci]" (ci is
/// the default); '#' starts a comment line.
class Lexicon {
 public:
  struct Entry {
    std::string term;
    SuperconLabel label;
    bool case_sensitive;
  };

  static Lexicon parse(std::string_view content);
  static Lexicon load(const std::string& path);

  /// Throws if the term is already mapped to a different label.
  void add_term(std::string_view term, SuperconLabel label,
                bool case_sensitive = false);

  const std::vector<Entry>& entries() const { return entries_; }
  const TermMatcher& matcher() const { return matcher_; }

  /// Surface-pattern toggles (on by default): temperature/pressure
  /// expressions and chemical-formula shaped tokens.
  bool quantity_patterns = true;
  bool formula_patterns = true;

 private:
  std::vector<Entry> entries_;
  TermMatcher matcher_;
};

}  // namespace supercon
