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

#include "json.hpp"
#include "supercon/document.hpp"

// Canonical JSON document format. Spans serialize as two-integer arrays;
// label vocabularies are closed: an unknown tag raises an error instead
// of being dropped.
namespace supercon::io {

using json = nlohmann::json;

json to_json(const Quantity& quantity);
json to_json(const MaterialStructure& structure);
json to_json(const AnalyzedMaterial& material);
json to_json(const TcDecision& decision);
json to_json(const Entity& entity);
json to_json(const Link& link);
json to_json(const Sentence& sentence);
json to_json(const Biblio& biblio);
json to_json(const AnnotatedDocument& document);

Quantity quantity_from_json(const json& value);
MaterialStructure material_structure_from_json(const json& value);
AnalyzedMaterial analyzed_material_from_json(const json& value);
TcDecision tc_decision_from_json(const json& value);
Entity entity_from_json(const json& value);
Link link_from_json(const json& value);
Sentence sentence_from_json(const json& value);
Biblio biblio_from_json(const json& value);
AnnotatedDocument document_from_json(const json& value);

AnnotatedDocument load_document(const std::string& path);
void save_document(const AnnotatedDocument& document, const std::string& path);

}  // namespace supercon::io
