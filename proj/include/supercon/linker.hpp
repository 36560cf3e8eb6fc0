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

#include "supercon/document.hpp"

namespace supercon {

/// Keywords and punctuation that signal a logical break between
/// predicates; their presence between two entities doubles the linking
/// distance (once per pair). Defaults are the shipped set:
/// "," "." ";" and but while whereas which although.
struct PenaltyTerms {
  std::vector<std::u32string> words;        // compared case-folded
  std::vector<char32_t> punctuation;

  static PenaltyTerms defaults();
  static PenaltyTerms parse(std::string_view content);  // one term per line
  static PenaltyTerms load(const std::string& path);
};

/// Entity centroid in the integer character convention used for the
/// linking distances (one-based midpoint, halves rounded up).
std::int64_t centroid(const Span& span);

/// The span expanded to the innermost parenthesis pair that fully
/// encloses it (including the parens); the span itself when none does.
Span expanded_span(const std::u32string& sentence_text, const Span& span);

/// |centroid(a) - centroid(b)| with no expansion or penalty.
std::int64_t raw_distance(const Span& a, const Span& b);

/// True if a penalty word or punctuation occurs strictly between the two
/// spans.
bool penalty_between(const std::u32string& sentence_text, const Span& a,
                     const Span& b, const PenaltyTerms& penalties);

/// The linking distance: the smaller of the raw and the
/// parenthesis-expanded centroid distance, doubled once when a penalty
/// term lies between the (expanded) spans.
std::int64_t adjusted_distance(const std::u32string& sentence_text,
                               const Span& source, const Span& target,
                               const PenaltyTerms& penalties);

/// Positional pairing for "respectively" sentences: i-th source to i-th
/// target, extras unlinked.
std::vector<Link> order_link(LinkType type,
                             const std::vector<Entity>& sources,
                             const std::vector<Entity>& targets);

/// Links each target to the source with the minimal adjusted distance;
/// ties go to the leftmost source.
std::vector<Link> distance_link(std::string_view sentence_text, LinkType type,
                                const std::vector<Entity>& sources,
                                const std::vector<Entity>& targets,
                                const PenaltyTerms& penalties);

bool contains_respectively(std::string_view sentence_text);

/// Sentence-level dispatch: one source and one target link automatically;
/// "respectively" triggers order-linking; anything else uses
/// distance-linking. tcValue endpoints already rejected by the Tc
/// classifier never participate.
std::vector<Link> link_sentence(const Sentence& sentence, LinkType type,
                                const PenaltyTerms& penalties);

}  // namespace supercon
