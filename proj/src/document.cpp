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

#include "supercon/document.hpp"

#include <sstream>

#include "supercon/utf8.hpp"

namespace supercon {

namespace {

std::string describe(std::size_t sentence_index, std::size_t entity_index,
                     const Entity& entity) {
  std::ostringstream out;
  out << "sentence " << sentence_index << " entity " << entity_index << " ("
      << to_string(entity.label) << " [" << entity.span.start << ","
      << entity.span.end << "))";
  return out.str();
}

bool is_hex(const std::string& text) {
  for (char c : text)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
          (c >= 'A' && c <= 'F')))
      return false;
  return true;
}

}  // namespace

std::vector<std::string> validate_document(const AnnotatedDocument& document) {
  std::vector<std::string> violations;

  if (document.digest.empty() || !is_hex(document.digest))
    violations.push_back("document digest is not a hex string");

  for (std::size_t s = 0; s < document.sentences.size(); ++s) {
    const Sentence& sentence = document.sentences[s];
    const auto text_length =
        static_cast<std::int32_t>(utf8::length(sentence.text));

    for (std::size_t e = 0; e < sentence.entities.size(); ++e) {
      const Entity& entity = sentence.entities[e];
      if (!(0 <= entity.span.start && entity.span.start < entity.span.end &&
            entity.span.end <= text_length)) {
        std::ostringstream out;
        out << describe(s, e, entity) << ": span out of bounds, sentence has "
            << text_length << " characters";
        violations.push_back(out.str());
        continue;
      }
      std::string slice =
          utf8::substr(sentence.text, entity.span.start, entity.span.end);
      if (slice != entity.surface)
        violations.push_back(describe(s, e, entity) +
                             ": surface '" + entity.surface +
                             "' does not match sentence text '" + slice + "'");
      if (e > 0 &&
          sentence.entities[e - 1].span.start > entity.span.start)
        violations.push_back(describe(s, e, entity) +
                             ": entities not sorted by span start");

      bool allows_quantity = entity.label == SuperconLabel::tc_value ||
                             entity.label == SuperconLabel::pressure;
      if (entity.quantity && !allows_quantity)
        violations.push_back(describe(s, e, entity) +
                             ": quantity attribute on a label that does not "
                             "define it");
      if (entity.material && entity.label != SuperconLabel::material)
        violations.push_back(describe(s, e, entity) +
                             ": material attribute on a non-material label");
      if (entity.tc_decision && entity.label != SuperconLabel::tc_value)
        violations.push_back(describe(s, e, entity) +
                             ": tc decision on a non-tcValue label");

      for (std::size_t f = e + 1; f < sentence.entities.size(); ++f) {
        const Entity& other = sentence.entities[f];
        if (other.label == entity.label && other.span.overlaps(entity.span)) {
          violations.push_back(
              describe(s, e, entity) + " overlaps " +
              describe(s, f, other) +
              ": same-label entities must not overlap after merging");
        }
      }
    }
  }
  return violations;
}

}  // namespace supercon
