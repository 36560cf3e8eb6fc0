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

#include <optional>
#include <string>
#include <vector>

#include "supercon/entity.hpp"
#include "supercon/links.hpp"

namespace supercon {

struct Sentence {
  std::string text;
  std::int32_t offset = 0;  // code-point offset in the document text
  Subsection subsection = Subsection::paragraph;
  std::vector<Entity> entities;  // sorted by span start
  std::vector<Link> links;

  bool operator==(const Sentence&) const = default;
};

struct Biblio {
  std::optional<std::string> title;
  std::optional<std::string> authors;
  std::optional<std::string> doi;
  std::optional<std::string> publisher;
  std::optional<std::string> journal;
  std::optional<std::string> year;

  bool operator==(const Biblio&) const = default;
};

struct AnnotatedDocument {
  std::string id;
  Biblio biblio;
  std::vector<Sentence> sentences;
  std::string digest;     // SHA-256 hex over the raw input bytes
  std::string timestamp;  // ISO-8601, stamped once per processing run

  bool operator==(const AnnotatedDocument&) const = default;
};

/// Checks the structural invariants (span bounds, surface/text agreement,
/// ordering, same-label overlap after merge, attribute placement, digest
/// shape). Violations are data, not failures: the list is empty for a
/// valid document.
std::vector<std::string> validate_document(const AnnotatedDocument& document);

}  // namespace supercon
