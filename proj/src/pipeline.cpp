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

#include "supercon/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "supercon/default_data.hpp"
#include "supercon/digest.hpp"
#include "supercon/json_io.hpp"
#include "supercon/tagger.hpp"

namespace supercon {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void register_material_names(PipelineConfig& config,
                             std::string_view name_table) {
  // Known material names double as material terms for the tagger.
  std::istringstream stream{std::string(name_table)};
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    config.lexicon.add_term(line.substr(0, tab), SuperconLabel::material);
  }
}

}  // namespace

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig config;
  config.lexicon = Lexicon::parse(data::kLexicon);
  config.names = NameLookup::parse(data::kNameLookup);
  config.taxonomy = TaxonomyRules::parse(data::kTaxonomy);
  config.tc_terms = TcTermList::parse(data::kTcTerms);
  config.penalties = PenaltyTerms::parse(data::kPenaltyTerms);
  register_material_names(config, data::kNameLookup);
  return config;
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
  nlohmann::json value = nlohmann::json::parse(read_file(path));
  PipelineConfig config;
  std::string name_table = value.contains("name_lookup")
                               ? read_file(value["name_lookup"])
                               : std::string(data::kNameLookup);
  config.lexicon = value.contains("lexicon")
                       ? Lexicon::load(value["lexicon"])
                       : Lexicon::parse(data::kLexicon);
  config.names = NameLookup::parse(name_table);
  config.taxonomy = value.contains("taxonomy")
                        ? TaxonomyRules::load(value["taxonomy"])
                        : TaxonomyRules::parse(data::kTaxonomy);
  config.tc_terms = value.contains("tc_terms")
                        ? TcTermList::load(value["tc_terms"])
                        : TcTermList::parse(data::kTcTerms);
  config.penalties = value.contains("penalty_terms")
                         ? PenaltyTerms::load(value["penalty_terms"])
                         : PenaltyTerms::parse(data::kPenaltyTerms);
  config.tc_window = value.value("tc_window", -1);
  config.workers = value.value("workers", 1);
  if (value.contains("format")) {
    auto format = export_format_from(value["format"].get<std::string>());
    if (!format)
      throw std::runtime_error("config: unknown format '" +
                               value["format"].get<std::string>() + "'");
    config.format = *format;
  }
  register_material_names(config, name_table);
  return config;
}

namespace {

void enrich_entities(Sentence& sentence, const PipelineConfig& config) {
  for (Entity& entity : sentence.entities) {
    switch (entity.label) {
      case SuperconLabel::tc_value:
      case SuperconLabel::pressure:
        if (!entity.quantity)
          entity.quantity = try_parse_quantity(entity.surface);
        break;
      case SuperconLabel::material:
        if (!entity.material)
          entity.material =
              analyze_material(entity.surface, config.names, config.taxonomy);
        break;
      default:
        break;
    }
  }
}

}  // namespace

void annotate_document(AnnotatedDocument& document,
                       const PipelineConfig& config) {
  bool has_gold = false;
  for (const Sentence& sentence : document.sentences)
    if (!sentence.entities.empty()) has_gold = true;

  for (Sentence& sentence : document.sentences) {
    if (has_gold) {
      if (!sentence.entities.empty())
        sentence.entities = merge_entities(
            {{TaggerSource{"gold", 0}, std::move(sentence.entities)}});
    } else {
      sentence.entities = merge_entities(
          {{TaggerSource{"baseline", 1}, tag(sentence, config.lexicon)}});
    }

    enrich_entities(sentence, config);

    for (Entity& entity : sentence.entities)
      if (entity.label == SuperconLabel::tc_value)
        entity.tc_decision =
            classify_tc(entity, sentence, config.tc_terms, config.tc_window);

    sentence.links.clear();
    for (LinkType type :
         {LinkType::material_tc_value, LinkType::tc_value_pressure,
          LinkType::me_method_tc_value}) {
      for (Link& link : link_sentence(sentence, type, config.penalties))
        sentence.links.push_back(std::move(link));
    }
  }
}

std::vector<SuperconRecord> records_for(const AnnotatedDocument& document) {
  return build_records(document, cluster_materials(document));
}

ExtractionResult process_text(const std::string& id, std::string_view text,
                              const PipelineConfig& config,
                              const std::string& timestamp) {
  ExtractionResult result;
  result.document = document_from_text(id, text);
  result.document.timestamp = timestamp;
  annotate_document(result.document, config);
  result.records = records_for(result.document);
  return result;
}

std::string render_extraction(const ExtractionResult& result) {
  nlohmann::json records = nlohmann::json::array();
  for (const SuperconRecord& record : result.records)
    records.push_back(record_to_json(record));
  nlohmann::json out{{"document", io::to_json(result.document)},
                     {"records", std::move(records)}};
  return out.dump(2) + "\n";
}

MapFunction make_map_function(const PipelineConfig& config,
                              const std::optional<std::string>& timestamp) {
  std::string run_stamp = timestamp ? *timestamp : utc_timestamp();
  return [&config, run_stamp](const std::string& path) {
    std::string bytes = read_file(path);
    std::filesystem::path file_path(path);
    AnnotatedDocument document;
    if (file_path.extension() == ".json") {
      document = io::document_from_json(nlohmann::json::parse(bytes));
      if (document.digest.empty()) document.digest = sha256_hex(bytes);
      if (document.timestamp.empty()) document.timestamp = run_stamp;
    } else {
      document = document_from_text(file_path.stem().string(), bytes);
      document.timestamp = run_stamp;
    }
    annotate_document(document, config);
    return records_for(document);
  };
}

}  // namespace supercon
