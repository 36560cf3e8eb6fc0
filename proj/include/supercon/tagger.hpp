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
#include <vector>

#include "json.hpp"
#include "supercon/document.hpp"
#include "supercon/lexicon.hpp"

namespace supercon {

/// One producer of entity candidates. Lower rank wins tie-breaks when
/// streams are merged; names must be unique within a pipeline.
struct TaggerSource {
  std::string name;
  int rank = 0;

  bool operator==(const TaggerSource&) const = default;
};

/// Deterministic baseline tagger: lexicon phrase hits plus built-in
/// quantity and formula-shaped surface patterns. Output entities carry
/// quantity attributes where the pattern implies one; spans are valid by
/// construction and may overlap before merging.
std::vector<Entity> tag(const Sentence& sentence, const Lexicon& lexicon);

/// Fig.-3-style stream aggregation generalized to N prioritized sources:
/// exact duplicates (same span and label) collapse to the best-ranked
/// one, then each overlap cluster keeps only its longest entity; ties go
/// to the better source rank, then the leftmost span.
std::vector<Entity> merge_entities(
    const std::vector<std::pair<TaggerSource, std::vector<Entity>>>& streams);

class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& reason)
      : std::runtime_error(reason) {}
};

/// Builds an AnnotatedDocument from raw text (one paragraph per line)
/// with no entities. The digest covers the raw text bytes.
AnnotatedDocument document_from_text(std::string id, std::string_view text);

/// Attaches externally produced annotations (gold or third-party NER) to
/// a text. The annotation payload is a JSON array of objects:
///   {"sentence_index": 0, "start": 5, "end": 9, "label": "material"}
/// Offsets are code points relative to the sentence text. Out-of-range
/// indices or spans raise IngestError naming the offending annotation;
/// overlaps are normalized through merge_entities.
AnnotatedDocument ingest_annotations(std::string id, std::string_view text,
                                     const nlohmann::json& annotations);

}  // namespace supercon
