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

#include "supercon/document.hpp"
#include "supercon/lexicon.hpp"

namespace supercon {

/// Acceptance and rejection vocabulary for the Tc decision. File format
/// matches the tagger lexicon: "term<TAB>category[<TAB>cs|ci]" with
/// category one of accept, non_tc, width, negation, relative.
class TcTermList {
 public:
  static TcTermList parse(std::string_view content);
  static TcTermList load(const std::string& path);

  void add_term(std::string_view term, std::string_view category,
                bool case_sensitive = false);

  const TermMatcher& matcher() const { return matcher_; }
  std::size_t size() const { return count_; }

 private:
  TermMatcher matcher_;
  std::size_t count_ = 0;
};

/// Decides whether a tcValue denotes a superconducting critical
/// temperature. Evidence is gathered from the candidate's sentence: tc
/// expression entities and acceptance terms support it, rejection terms
/// (annealing/Curie-style keywords, ΔTc width, negation, relative
/// comparison) count against it. The nearest evidence by character
/// distance wins; rejection wins ties. Acceptance terms only count
/// within `window` characters of the candidate (negative = whole
/// sentence).
TcDecision classify_tc(const Entity& candidate, const Sentence& sentence,
                       const TcTermList& terms, int window = -1);

}  // namespace supercon
