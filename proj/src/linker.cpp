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

#include "supercon/linker.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "supercon/lexicon.hpp"
#include "supercon/utf8.hpp"

namespace supercon {

PenaltyTerms PenaltyTerms::defaults() {
  PenaltyTerms terms;
  terms.punctuation = {U',', U'.', U';'};
  for (std::u32string_view word :
       {U"and", U"but", U"while", U"whereas", U"which", U"although"})
    terms.words.emplace_back(word);
  return terms;
}

PenaltyTerms PenaltyTerms::parse(std::string_view content) {
  PenaltyTerms terms;
  std::istringstream stream{std::string(content)};
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::u32string decoded = utf8::decode(line);
    if (decoded.size() == 1 && !utf8::is_letter(decoded[0]) &&
        !utf8::is_ascii_digit(decoded[0]))
      terms.punctuation.push_back(decoded[0]);
    else
      terms.words.push_back(utf8::fold(decoded));
  }
  return terms;
}

PenaltyTerms PenaltyTerms::load(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open penalty file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str());
}

std::int64_t centroid(const Span& span) {
  // One-based midpoint with halves rounded up; reproduces the reference
  // integers (e.g. centroid("39 K" at [35,39)) = 38).
  return (static_cast<std::int64_t>(span.start) + span.end) / 2 + 1;
}

Span expanded_span(const std::u32string& text, const Span& span) {
  std::vector<std::size_t> stack;
  Span best = span;
  std::int32_t best_open = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == U'(') {
      stack.push_back(i);
    } else if (text[i] == U')' && !stack.empty()) {
      auto open = static_cast<std::int32_t>(stack.back());
      auto close = static_cast<std::int32_t>(i);
      stack.pop_back();
      if (open < span.start && span.end <= close && open > best_open) {
        best = Span{open, close + 1};
        best_open = open;
      }
    }
  }
  return best;
}

std::int64_t raw_distance(const Span& a, const Span& b) {
  std::int64_t d = centroid(a) - centroid(b);
  return d < 0 ? -d : d;
}

bool penalty_between(const std::u32string& text, const Span& a, const Span& b,
                     const PenaltyTerms& penalties) {
  std::int32_t gap_start = std::min(a.end, b.end);
  std::int32_t gap_end = std::max(a.start, b.start);
  if (gap_start >= gap_end) return false;  // overlapping or adjacent

  std::u32string gap = text.substr(gap_start, gap_end - gap_start);
  for (char32_t cp : gap)
    for (char32_t penalty : penalties.punctuation)
      if (cp == penalty) return true;

  for (const TextToken& token : tokenize(gap))
    for (const std::u32string& word : penalties.words)
      if (token.folded == word) return true;
  return false;
}

std::int64_t adjusted_distance(const std::u32string& text, const Span& source,
                               const Span& target,
                               const PenaltyTerms& penalties) {
  Span expanded_source = expanded_span(text, source);
  Span expanded_target = expanded_span(text, target);
  std::int64_t d = std::min(raw_distance(source, target),
                            raw_distance(expanded_source, expanded_target));
  if (penalty_between(text, expanded_source, expanded_target, penalties))
    d *= 2;
  return d;
}

std::vector<Link> order_link(LinkType type,
                             const std::vector<Entity>& sources,
                             const std::vector<Entity>& targets) {
  std::vector<Link> links;
  std::size_t pairs = std::min(sources.size(), targets.size());
  for (std::size_t i = 0; i < pairs; ++i) {
    Link link;
    link.type = type;
    link.source = sources[i];
    link.target = targets[i];
    link.method = LinkMethod::order_linking;
    links.push_back(std::move(link));
  }
  return links;
}

std::vector<Link> distance_link(std::string_view sentence_text, LinkType type,
                                const std::vector<Entity>& sources,
                                const std::vector<Entity>& targets,
                                const PenaltyTerms& penalties) {
  std::vector<Link> links;
  if (sources.empty()) return links;
  std::u32string text = utf8::decode(sentence_text);
  for (const Entity& target : targets) {
    const Entity* best = nullptr;
    std::int64_t best_distance = 0;
    for (const Entity& source : sources) {
      std::int64_t d = adjusted_distance(text, source.span, target.span,
                                         penalties);
      if (!best || d < best_distance ||
          (d == best_distance && source.span.start < best->span.start)) {
        best = &source;
        best_distance = d;
      }
    }
    Link link;
    link.type = type;
    link.source = *best;
    link.target = target;
    link.method = LinkMethod::distance_linking;
    link.distance = best_distance;
    links.push_back(std::move(link));
  }
  return links;
}

bool contains_respectively(std::string_view sentence_text) {
  std::u32string text = utf8::decode(sentence_text);
  for (const TextToken& token : tokenize(text))
    if (token.folded == U"respectively") return true;
  return false;
}

namespace {

bool endpoint_usable(const Entity& entity) {
  if (entity.label != SuperconLabel::tc_value) return true;
  // Pre-filtered by the Tc classifier when a decision is attached.
  return !entity.tc_decision || entity.tc_decision->accepted;
}

}  // namespace

std::vector<Link> link_sentence(const Sentence& sentence, LinkType type,
                                const PenaltyTerms& penalties) {
  std::vector<Entity> sources;
  std::vector<Entity> targets;
  for (const Entity& entity : sentence.entities) {
    if (!endpoint_usable(entity)) continue;
    if (entity.label == source_label(type)) sources.push_back(entity);
    if (entity.label == target_label(type)) targets.push_back(entity);
  }
  if (sources.empty() || targets.empty()) return {};

  if (sources.size() == 1 && targets.size() == 1) {
    Link link;
    link.type = type;
    link.source = sources.front();
    link.target = targets.front();
    link.method = LinkMethod::pair_rule;
    return {std::move(link)};
  }
  if (contains_respectively(sentence.text))
    return order_link(type, sources, targets);
  return distance_link(sentence.text, type, sources, targets, penalties);
}

}  // namespace supercon
