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

#include "supercon/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace supercon::io {

namespace {

json span_to_json(const Span& span) { return json::array({span.start, span.end}); }

Span span_from_json(const json& value) {
  if (!value.is_array() || value.size() != 2)
    throw std::runtime_error("span must be a two-integer array");
  return Span{value[0].get<std::int32_t>(), value[1].get<std::int32_t>()};
}

json field_slice_to_json(const FieldSlice& field) {
  return json{{"text", field.text}, {"span", span_to_json(field.span)}};
}

FieldSlice field_slice_from_json(const json& value) {
  return FieldSlice{value.at("text").get<std::string>(),
                    span_from_json(value.at("span"))};
}

json composition_to_json(const Composition& composition) {
  json entries = json::array();
  for (const CompositionEntry& entry : composition.entries) {
    json e{{"site", entry.site}, {"stoich", entry.stoich.render()}};
    if (entry.site_is_variable) e["variable"] = true;
    entries.push_back(std::move(e));
  }
  return entries;
}

Composition composition_from_json(const json& value) {
  Composition composition;
  for (const json& e : value) {
    CompositionEntry entry;
    entry.site = e.at("site").get<std::string>();
    entry.site_is_variable = e.value("variable", false);
    auto stoich = parse_stoich(e.at("stoich").get<std::string>());
    if (!stoich)
      throw std::runtime_error("unreadable stoichiometry '" +
                               e.at("stoich").get<std::string>() + "'");
    entry.stoich = *stoich;
    composition.entries.push_back(std::move(entry));
  }
  return composition;
}

json resolved_formula_to_json(const ResolvedFormula& resolved) {
  json out{{"formula", resolved.formula},
           {"composition", composition_to_json(resolved.composition)}};
  if (!resolved.assignment.empty()) out["assignment"] = resolved.assignment;
  return out;
}

ResolvedFormula resolved_formula_from_json(const json& value) {
  ResolvedFormula resolved;
  resolved.formula = value.at("formula").get<std::string>();
  resolved.composition = composition_from_json(value.at("composition"));
  if (value.contains("assignment"))
    resolved.assignment =
        value.at("assignment").get<std::map<std::string, std::string>>();
  return resolved;
}

}  // namespace

json to_json(const Quantity& quantity) {
  json out{{"kind", std::string(to_string(quantity.kind))},
           {"value", quantity.value},
           {"unit", quantity.unit},
           {"normalized", quantity.normalized}};
  if (quantity.qualifier != Qualifier::none)
    out["qualifier"] = std::string(to_string(quantity.qualifier));
  if (quantity.value_high) out["value_high"] = *quantity.value_high;
  if (quantity.normalized_high)
    out["normalized_high"] = *quantity.normalized_high;
  return out;
}

Quantity quantity_from_json(const json& value) {
  Quantity q;
  auto kind = quantity_kind_from(value.at("kind").get<std::string>());
  if (!kind)
    throw std::runtime_error("unknown quantity kind '" +
                             value.at("kind").get<std::string>() + "'");
  q.kind = *kind;
  if (value.contains("qualifier")) {
    auto qualifier = qualifier_from(value.at("qualifier").get<std::string>());
    if (!qualifier)
      throw std::runtime_error("unknown qualifier '" +
                               value.at("qualifier").get<std::string>() + "'");
    q.qualifier = *qualifier;
  }
  q.value = value.at("value").get<double>();
  q.unit = value.at("unit").get<std::string>();
  q.normalized = value.at("normalized").get<double>();
  if (value.contains("value_high"))
    q.value_high = value.at("value_high").get<double>();
  if (value.contains("normalized_high"))
    q.normalized_high = value.at("normalized_high").get<double>();
  return q;
}

json to_json(const MaterialStructure& structure) {
  json out{{"raw", structure.raw}};
  if (structure.name) out["name"] = field_slice_to_json(*structure.name);
  if (structure.formula)
    out["formula"] = field_slice_to_json(*structure.formula);
  if (structure.doping) out["doping"] = field_slice_to_json(*structure.doping);
  if (structure.shape) out["shape"] = field_slice_to_json(*structure.shape);
  if (structure.substrate)
    out["substrate"] = field_slice_to_json(*structure.substrate);
  if (structure.fabrication)
    out["fabrication"] = field_slice_to_json(*structure.fabrication);
  if (!structure.variables.empty()) out["variables"] = structure.variables;
  if (!structure.notes.empty()) out["notes"] = structure.notes;
  if (structure.low_confidence) out["low_confidence"] = true;
  return out;
}

MaterialStructure material_structure_from_json(const json& value) {
  MaterialStructure structure;
  structure.raw = value.at("raw").get<std::string>();
  if (value.contains("name"))
    structure.name = field_slice_from_json(value.at("name"));
  if (value.contains("formula"))
    structure.formula = field_slice_from_json(value.at("formula"));
  if (value.contains("doping"))
    structure.doping = field_slice_from_json(value.at("doping"));
  if (value.contains("shape"))
    structure.shape = field_slice_from_json(value.at("shape"));
  if (value.contains("substrate"))
    structure.substrate = field_slice_from_json(value.at("substrate"));
  if (value.contains("fabrication"))
    structure.fabrication = field_slice_from_json(value.at("fabrication"));
  if (value.contains("variables"))
    structure.variables =
        value.at("variables")
            .get<std::map<std::string, std::vector<std::string>>>();
  if (value.contains("notes"))
    structure.notes = value.at("notes").get<std::vector<std::string>>();
  structure.low_confidence = value.value("low_confidence", false);
  return structure;
}

json to_json(const AnalyzedMaterial& material) {
  json out{{"structure", to_json(material.structure)}};
  if (material.composition)
    out["composition"] = composition_to_json(*material.composition);
  if (!material.classes.empty()) out["classes"] = material.classes;
  if (!material.resolved.empty()) {
    json resolved = json::array();
    for (const ResolvedFormula& r : material.resolved)
      resolved.push_back(resolved_formula_to_json(r));
    out["resolved"] = std::move(resolved);
  }
  return out;
}

AnalyzedMaterial analyzed_material_from_json(const json& value) {
  AnalyzedMaterial material;
  material.structure = material_structure_from_json(value.at("structure"));
  if (value.contains("composition"))
    material.composition = composition_from_json(value.at("composition"));
  if (value.contains("classes"))
    material.classes = value.at("classes").get<std::vector<std::string>>();
  if (value.contains("resolved"))
    for (const json& r : value.at("resolved"))
      material.resolved.push_back(resolved_formula_from_json(r));
  return material;
}

json to_json(const TcDecision& decision) {
  json out{{"accepted", decision.accepted},
           {"reason", std::string(to_string(decision.reason))}};
  if (!decision.evidence.empty()) out["evidence"] = decision.evidence;
  return out;
}

TcDecision tc_decision_from_json(const json& value) {
  auto reason = tc_reason_from(value.at("reason").get<std::string>());
  if (!reason)
    throw std::runtime_error("unknown tc reason '" +
                             value.at("reason").get<std::string>() + "'");
  TcDecision decision = TcDecision::make(*reason, value.value("evidence", ""));
  if (decision.accepted != value.at("accepted").get<bool>())
    throw std::runtime_error("tc decision accepted flag contradicts reason");
  return decision;
}

json to_json(const Entity& entity) {
  json out{{"span", span_to_json(entity.span)},
           {"label", std::string(to_string(entity.label))},
           {"surface", entity.surface}};
  if (entity.quantity) out["quantity"] = to_json(*entity.quantity);
  if (entity.material) out["material"] = to_json(*entity.material);
  if (entity.tc_decision) out["tc_decision"] = to_json(*entity.tc_decision);
  return out;
}

Entity entity_from_json(const json& value) {
  Entity entity;
  entity.span = span_from_json(value.at("span"));
  auto label = supercon_label_from(value.at("label").get<std::string>());
  if (!label)
    throw std::runtime_error("unknown entity label '" +
                             value.at("label").get<std::string>() + "'");
  entity.label = *label;
  entity.surface = value.at("surface").get<std::string>();
  if (value.contains("quantity"))
    entity.quantity = quantity_from_json(value.at("quantity"));
  if (value.contains("material"))
    entity.material = analyzed_material_from_json(value.at("material"));
  if (value.contains("tc_decision"))
    entity.tc_decision = tc_decision_from_json(value.at("tc_decision"));
  return entity;
}

json to_json(const Link& link) {
  json out{{"type", std::string(to_string(link.type))},
           {"method", std::string(to_string(link.method))},
           {"source", to_json(link.source)},
           {"target", to_json(link.target)}};
  if (link.distance) out["distance"] = *link.distance;
  return out;
}

Link link_from_json(const json& value) {
  Link link;
  auto type = link_type_from(value.at("type").get<std::string>());
  if (!type)
    throw std::runtime_error("unknown link type '" +
                             value.at("type").get<std::string>() + "'");
  link.type = *type;
  auto method = link_method_from(value.at("method").get<std::string>());
  if (!method)
    throw std::runtime_error("unknown link method '" +
                             value.at("method").get<std::string>() + "'");
  link.method = *method;
  link.source = entity_from_json(value.at("source"));
  link.target = entity_from_json(value.at("target"));
  if (value.contains("distance"))
    link.distance = value.at("distance").get<std::int64_t>();
  return link;
}

json to_json(const Sentence& sentence) {
  json out{{"text", sentence.text},
           {"offset", sentence.offset},
           {"subsection", std::string(to_string(sentence.subsection))}};
  json entities = json::array();
  for (const Entity& entity : sentence.entities)
    entities.push_back(to_json(entity));
  out["entities"] = std::move(entities);
  if (!sentence.links.empty()) {
    json links = json::array();
    for (const Link& link : sentence.links) links.push_back(to_json(link));
    out["links"] = std::move(links);
  }
  return out;
}

Sentence sentence_from_json(const json& value) {
  Sentence sentence;
  sentence.text = value.at("text").get<std::string>();
  sentence.offset = value.value("offset", 0);
  auto subsection =
      subsection_from(value.value("subsection", std::string("paragraph")));
  if (!subsection)
    throw std::runtime_error("unknown subsection '" +
                             value.at("subsection").get<std::string>() + "'");
  sentence.subsection = *subsection;
  if (value.contains("entities"))
    for (const json& e : value.at("entities"))
      sentence.entities.push_back(entity_from_json(e));
  if (value.contains("links"))
    for (const json& l : value.at("links"))
      sentence.links.push_back(link_from_json(l));
  return sentence;
}

json to_json(const Biblio& biblio) {
  json out = json::object();
  if (biblio.title) out["title"] = *biblio.title;
  if (biblio.authors) out["authors"] = *biblio.authors;
  if (biblio.doi) out["doi"] = *biblio.doi;
  if (biblio.publisher) out["publisher"] = *biblio.publisher;
  if (biblio.journal) out["journal"] = *biblio.journal;
  if (biblio.year) out["year"] = *biblio.year;
  return out;
}

Biblio biblio_from_json(const json& value) {
  Biblio biblio;
  if (value.contains("title")) biblio.title = value.at("title").get<std::string>();
  if (value.contains("authors"))
    biblio.authors = value.at("authors").get<std::string>();
  if (value.contains("doi")) biblio.doi = value.at("doi").get<std::string>();
  if (value.contains("publisher"))
    biblio.publisher = value.at("publisher").get<std::string>();
  if (value.contains("journal"))
    biblio.journal = value.at("journal").get<std::string>();
  if (value.contains("year")) biblio.year = value.at("year").get<std::string>();
  return biblio;
}

json to_json(const AnnotatedDocument& document) {
  json out{{"id", document.id},
           {"hash", document.digest},
           {"timestamp", document.timestamp}};
  json biblio = to_json(document.biblio);
  if (!biblio.empty()) out["biblio"] = std::move(biblio);
  json sentences = json::array();
  for (const Sentence& sentence : document.sentences)
    sentences.push_back(to_json(sentence));
  out["sentences"] = std::move(sentences);
  return out;
}

AnnotatedDocument document_from_json(const json& value) {
  AnnotatedDocument document;
  document.id = value.at("id").get<std::string>();
  document.digest = value.value("hash", std::string());
  document.timestamp = value.value("timestamp", std::string());
  if (value.contains("biblio"))
    document.biblio = biblio_from_json(value.at("biblio"));
  if (value.contains("sentences"))
    for (const json& s : value.at("sentences"))
      document.sentences.push_back(sentence_from_json(s));
  return document;
}

AnnotatedDocument load_document(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open document: " + path);
  json value = json::parse(file);
  return document_from_json(value);
}

void save_document(const AnnotatedDocument& document, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write document: " + path);
  file << to_json(document).dump(2) << "\n";
}

}  // namespace supercon::io
