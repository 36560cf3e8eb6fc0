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

#include "supercon/tc_classifier.hpp"

#include <fstream>
#include <sstream>

#include "supercon/utf8.hpp"

namespace supercon {

namespace {

// Term categories ride in the matcher payload.
enum Category : int {
  kAccept = 0,
  kWidth = 1,
  kNegation = 2,
  kRelative = 3,
  kNonTc = 4
};

std::optional<int> category_from(std::string_view name) {
  if (name == "accept") return kAccept;
  if (name == "width") return kWidth;
  if (name == "negation") return kNegation;
  if (name == "relative") return kRelative;
  if (name == "non_tc") return kNonTc;
  return std::nullopt;
}

TcReason reason_for(int category) {
  switch (category) {
    case kWidth: return TcReason::rejected_width;
    case kNegation: return TcReason::rejected_negation;
    case kRelative: return TcReason::rejected_relative;
    default: return TcReason::rejected_non_tc_keyword;
  }
}

std::int64_t gap(const Span& a, const Span& b) {
  if (a.overlaps(b)) return 0;
  if (b.start >= a.end) return b.start - a.end;
  return a.start - b.end;
}

}  // namespace

TcTermList TcTermList::parse(std::string_view content) {
  TcTermList list;
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
      throw std::runtime_error("tc term line " + std::to_string(line_number) +
                               ": expected 'term<TAB>category'");
    bool case_sensitive = fields.size() >= 3 && fields[2] == "cs";
    list.add_term(fields[0], fields[1], case_sensitive);
  }
  return list;
}

TcTermList TcTermList::load(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open tc term file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str());
}

void TcTermList::add_term(std::string_view term, std::string_view category,
                          bool case_sensitive) {
  auto payload = category_from(category);
  if (!payload)
    throw std::runtime_error("tc term '" + std::string(term) +
                             "': unknown category '" + std::string(category) +
                             "'");
  matcher_.add(term, case_sensitive, *payload);
  ++count_;
}

TcDecision classify_tc(const Entity& candidate, const Sentence& sentence,
                       const TcTermList& terms, int window) {
  struct Evidence {
    std::int64_t distance;
    bool rejecting;
    int priority;  // tie-break within the same distance class
    TcReason reason;
    std::string text;
  };
  std::vector<Evidence> evidence;

  for (const Entity& entity : sentence.entities) {
    if (entity.label != SuperconLabel::tc) continue;
    evidence.push_back(Evidence{gap(candidate.span, entity.span), false, 0,
                                TcReason::linked_tc_expression,
                                entity.surface});
  }

  std::u32string text = utf8::decode(sentence.text);
  for (const TermMatcher::Match& match : terms.matcher().find_all(text)) {
    std::int64_t distance = gap(candidate.span, match.span);
    if (match.payload == kAccept) {
      if (window >= 0 && distance > window) continue;
      evidence.push_back(
          Evidence{distance, false, 1, TcReason::standard_term, match.term});
    } else {
      evidence.push_back(Evidence{distance, true, match.payload,
                                  reason_for(match.payload), match.term});
    }
  }

  if (evidence.empty()) return TcDecision::make(TcReason::no_evidence);

  const Evidence* best = &evidence.front();
  for (const Evidence& e : evidence) {
    if (e.distance < best->distance ||
        (e.distance == best->distance &&
         (e.rejecting > best->rejecting ||
          (e.rejecting == best->rejecting && e.priority < best->priority))))
      best = &e;
  }
  return TcDecision::make(best->reason, best->text);
}

}  // namespace supercon
