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

#include "supercon/aggregator.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace supercon {

namespace {

std::string join(const std::vector<std::string>& parts,
                 const std::string& separator) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += separator;
    out += parts[i];
  }
  return out;
}

std::string render_variables(
    const std::map<std::string, std::vector<std::string>>& variables) {
  std::vector<std::string> parts;
  for (const auto& [var, values] : variables)
    parts.push_back(var + " = " + join(values, ", "));
  return join(parts, "; ");
}

std::string section_for(Subsection subsection) {
  switch (subsection) {
    case Subsection::title:
    case Subsection::abstract:
      return "header";
    default:
      return "body";
  }
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

const std::vector<std::string>& record_field_names() {
  static const std::vector<std::string> names = {
      "raw_material",
      "name",
      "formula",
      "doping",
      "shape",
      "variables",
      "class",
      "fabrication",
      "substrate",
      "critical_temperature",
      "critical_temperature_kelvin",
      "applied_pressure",
      "applied_pressure_gpa",
      "measurement_method",
      "section",
      "subsection",
      "authors",
      "title",
      "doi",
      "publisher",
      "journal",
      "year",
      "hash",
      "timestamp",
      "cluster_id"};
  return names;
}

namespace {

std::string format_double(double value) {
  std::ostringstream out;
  out.precision(10);
  out << value;
  return out.str();
}

std::string field_value(const SuperconRecord& r, const std::string& field) {
  if (field == "raw_material") return r.raw_material;
  if (field == "name") return r.name;
  if (field == "formula") return r.formula;
  if (field == "doping") return r.doping;
  if (field == "shape") return r.shape;
  if (field == "variables") return r.variables;
  if (field == "class") return r.material_class;
  if (field == "fabrication") return r.fabrication;
  if (field == "substrate") return r.substrate;
  if (field == "critical_temperature") return r.critical_temperature;
  if (field == "critical_temperature_kelvin")
    return r.critical_temperature_kelvin
               ? format_double(*r.critical_temperature_kelvin)
               : "";
  if (field == "applied_pressure") return r.applied_pressure;
  if (field == "applied_pressure_gpa")
    return r.applied_pressure_gpa ? format_double(*r.applied_pressure_gpa)
                                  : "";
  if (field == "measurement_method") return r.measurement_method;
  if (field == "section") return r.section;
  if (field == "subsection") return r.subsection;
  if (field == "authors") return r.authors;
  if (field == "title") return r.title;
  if (field == "doi") return r.doi;
  if (field == "publisher") return r.publisher;
  if (field == "journal") return r.journal;
  if (field == "year") return r.year;
  if (field == "hash") return r.hash;
  if (field == "timestamp") return r.timestamp;
  if (field == "cluster_id")
    return r.cluster_id >= 0 ? std::to_string(r.cluster_id) : "";
  return "";
}

}  // namespace

nlohmann::json record_to_json(const SuperconRecord& record) {
  nlohmann::json out;
  out["raw_material"] = record.raw_material;
  out["name"] = record.name;
  out["formula"] = record.formula;
  out["doping"] = record.doping;
  out["shape"] = record.shape;
  out["variables"] = record.variables;
  out["class"] = record.material_class;
  out["fabrication"] = record.fabrication;
  out["substrate"] = record.substrate;
  out["critical_temperature"] = record.critical_temperature;
  if (record.critical_temperature_kelvin)
    out["critical_temperature_kelvin"] = *record.critical_temperature_kelvin;
  out["applied_pressure"] = record.applied_pressure;
  if (record.applied_pressure_gpa)
    out["applied_pressure_gpa"] = *record.applied_pressure_gpa;
  out["measurement_method"] = record.measurement_method;
  out["section"] = record.section;
  out["subsection"] = record.subsection;
  out["authors"] = record.authors;
  out["title"] = record.title;
  out["doi"] = record.doi;
  out["publisher"] = record.publisher;
  out["journal"] = record.journal;
  out["year"] = record.year;
  out["hash"] = record.hash;
  out["timestamp"] = record.timestamp;
  out["cluster_id"] = record.cluster_id;
  return out;
}

SuperconRecord record_from_json(const nlohmann::json& value) {
  SuperconRecord record;
  record.raw_material = value.value("raw_material", "");
  record.name = value.value("name", "");
  record.formula = value.value("formula", "");
  record.doping = value.value("doping", "");
  record.shape = value.value("shape", "");
  record.variables = value.value("variables", "");
  record.material_class = value.value("class", "");
  record.fabrication = value.value("fabrication", "");
  record.substrate = value.value("substrate", "");
  record.critical_temperature = value.value("critical_temperature", "");
  if (value.contains("critical_temperature_kelvin"))
    record.critical_temperature_kelvin =
        value.at("critical_temperature_kelvin").get<double>();
  record.applied_pressure = value.value("applied_pressure", "");
  if (value.contains("applied_pressure_gpa"))
    record.applied_pressure_gpa =
        value.at("applied_pressure_gpa").get<double>();
  record.measurement_method = value.value("measurement_method", "");
  record.section = value.value("section", "");
  record.subsection = value.value("subsection", "");
  record.authors = value.value("authors", "");
  record.title = value.value("title", "");
  record.doi = value.value("doi", "");
  record.publisher = value.value("publisher", "");
  record.journal = value.value("journal", "");
  record.year = value.value("year", "");
  record.hash = value.value("hash", "");
  record.timestamp = value.value("timestamp", "");
  record.cluster_id = value.value("cluster_id", -1);
  return record;
}

std::vector<MaterialCluster> cluster_materials(
    const AnnotatedDocument& document) {
  struct Mention {
    int sentence;
    int entity;
    std::vector<const Composition*> resolved;
  };
  std::vector<Mention> mentions;
  for (int s = 0; s < static_cast<int>(document.sentences.size()); ++s) {
    const Sentence& sentence = document.sentences[s];
    for (int e = 0; e < static_cast<int>(sentence.entities.size()); ++e) {
      const Entity& entity = sentence.entities[e];
      if (entity.label != SuperconLabel::material) continue;
      Mention mention{s, e, {}};
      if (entity.material)
        for (const ResolvedFormula& formula : entity.material->resolved)
          if (formula.composition.resolved())
            mention.resolved.push_back(&formula.composition);
      mentions.push_back(std::move(mention));
    }
  }

  UnionFind components(mentions.size());
  for (std::size_t i = 0; i < mentions.size(); ++i)
    for (std::size_t j = i + 1; j < mentions.size(); ++j) {
      bool shared = false;
      for (const Composition* a : mentions[i].resolved) {
        for (const Composition* b : mentions[j].resolved)
          if (a->numerically_equal(*b)) {
            shared = true;
            break;
          }
        if (shared) break;
      }
      if (shared) components.unite(static_cast<int>(i), static_cast<int>(j));
    }

  std::map<int, MaterialCluster> by_root;
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    int root = components.find(static_cast<int>(i));
    MaterialCluster& cluster = by_root[root];
    cluster.mentions.emplace_back(mentions[i].sentence, mentions[i].entity);
    for (const Composition* composition : mentions[i].resolved) {
      std::string rendered = render_formula(*composition);
      if (std::find(cluster.shared_formulas.begin(),
                    cluster.shared_formulas.end(),
                    rendered) == cluster.shared_formulas.end())
        cluster.shared_formulas.push_back(rendered);
    }
  }

  std::vector<MaterialCluster> clusters;
  for (auto& [root, cluster] : by_root) {
    cluster.id = static_cast<int>(clusters.size());
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

std::vector<SuperconRecord> build_records(
    const AnnotatedDocument& document,
    const std::vector<MaterialCluster>& clusters) {
  auto cluster_of = [&](int sentence, int entity) {
    for (const MaterialCluster& cluster : clusters)
      for (const auto& [s, e] : cluster.mentions)
        if (s == sentence && e == entity) return cluster.id;
    return -1;
  };

  std::vector<SuperconRecord> records;
  for (int s = 0; s < static_cast<int>(document.sentences.size()); ++s) {
    const Sentence& sentence = document.sentences[s];
    for (const Link& link : sentence.links) {
      if (link.type != LinkType::material_tc_value) continue;
      const Entity& material = link.source;
      const Entity& tc_value = link.target;

      SuperconRecord record;
      record.raw_material = material.surface;
      if (material.material) {
        const MaterialStructure& structure = material.material->structure;
        if (structure.name) record.name = structure.name->text;
        if (structure.formula) record.formula = structure.formula->text;
        if (structure.doping) record.doping = structure.doping->text;
        if (structure.shape) record.shape = structure.shape->text;
        if (structure.substrate)
          record.substrate = structure.substrate->text;
        if (structure.fabrication)
          record.fabrication = structure.fabrication->text;
        record.variables = render_variables(structure.variables);
        record.material_class = join(material.material->classes, ", ");
      }
      record.critical_temperature = tc_value.surface;
      if (tc_value.quantity)
        record.critical_temperature_kelvin =
            tc_value.quantity->normalized_midpoint();

      for (const Link& pressure_link : sentence.links) {
        if (pressure_link.type != LinkType::tc_value_pressure) continue;
        if (!(pressure_link.source.span == tc_value.span &&
              pressure_link.source.label == tc_value.label))
          continue;
        record.applied_pressure = pressure_link.target.surface;
        if (pressure_link.target.quantity)
          record.applied_pressure_gpa =
              pressure_link.target.quantity->normalized_midpoint();
        break;
      }
      for (const Link& method_link : sentence.links) {
        if (method_link.type != LinkType::me_method_tc_value) continue;
        if (!(method_link.target.span == tc_value.span &&
              method_link.target.label == tc_value.label))
          continue;
        record.measurement_method = method_link.source.surface;
        break;
      }

      record.section = section_for(sentence.subsection);
      record.subsection = std::string(to_string(sentence.subsection));
      record.authors = document.biblio.authors.value_or("");
      record.title = document.biblio.title.value_or("");
      record.doi = document.biblio.doi.value_or("");
      record.publisher = document.biblio.publisher.value_or("");
      record.journal = document.biblio.journal.value_or("");
      record.year = document.biblio.year.value_or("");
      record.hash = document.digest;
      record.timestamp = document.timestamp;

      for (int e = 0; e < static_cast<int>(sentence.entities.size()); ++e) {
        const Entity& entity = sentence.entities[e];
        if (entity.label == SuperconLabel::material &&
            entity.span == material.span) {
          record.cluster_id = cluster_of(s, e);
          break;
        }
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::optional<ExportFormat> export_format_from(std::string_view name) {
  if (name == "csv") return ExportFormat::csv;
  if (name == "tsv") return ExportFormat::tsv;
  if (name == "json") return ExportFormat::json;
  return std::nullopt;
}

std::string_view to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::csv: return "csv";
    case ExportFormat::tsv: return "tsv";
    case ExportFormat::json: return "json";
  }
  return "csv";
}

namespace {

std::string quote_cell(const std::string& cell, char delimiter) {
  bool needs_quote = false;
  for (char c : cell)
    if (c == delimiter || c == '"' || c == '\n' || c == '\r')
      needs_quote = true;
  if (!needs_quote) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void export_records(const std::vector<SuperconRecord>& records,
                    ExportFormat format, std::ostream& out) {
  if (format == ExportFormat::json) {
    nlohmann::json array = nlohmann::json::array();
    for (const SuperconRecord& record : records)
      array.push_back(record_to_json(record));
    out << array.dump(2) << "\n";
    return;
  }
  char delimiter = format == ExportFormat::csv ? ',' : '\t';
  const auto& names = record_field_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << delimiter;
    out << names[i];
  }
  out << "\r\n";
  for (const SuperconRecord& record : records) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out << delimiter;
      out << quote_cell(field_value(record, names[i]), delimiter);
    }
    out << "\r\n";
  }
}

std::string export_records_string(const std::vector<SuperconRecord>& records,
                                  ExportFormat format) {
  std::ostringstream out;
  export_records(records, format, out);
  return out.str();
}

std::vector<std::string> corpus_files(const std::string& input_dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(input_dir)) {
    if (!entry.is_regular_file()) continue;
    std::string extension = entry.path().extension().string();
    if (extension == ".txt" || extension == ".json")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<SuperconRecord> load_database(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read database file: " + path);
  std::vector<SuperconRecord> records;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& error) {
      throw std::runtime_error("database line " +
                               std::to_string(line_number) + ": " +
                               error.what());
    }
  }
  return records;
}

RunReport process_corpus(const std::vector<std::string>& input_files,
                         const std::string& output_path,
                         const MapFunction& map_document, int workers) {
  struct Slot {
    bool ok = false;
    std::string error;
    std::vector<SuperconRecord> records;
    double millis = 0.0;
  };
  std::vector<Slot> slots(input_files.size());

  // Map: order-independent, one slot per file.
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t index = next.fetch_add(1);
      if (index >= input_files.size()) return;
      auto start = std::chrono::steady_clock::now();
      Slot& slot = slots[index];
      try {
        slot.records = map_document(input_files[index]);
        slot.ok = true;
      } catch (const std::exception& error) {
        slot.ok = false;
        slot.error = error.what();
      }
      slot.millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    }
  };
  int thread_count = std::max(1, workers);
  std::vector<std::thread> threads;
  threads.reserve(thread_count);
  for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  for (std::thread& thread : threads) thread.join();

  // Reduce: deterministic fold in input order with duplicate suppression.
  RunReport report;
  std::ofstream database(output_path, std::ios::binary);
  if (!database)
    throw std::runtime_error("cannot write database file: " + output_path);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < input_files.size(); ++i) {
    const Slot& slot = slots[i];
    DocumentOutcome outcome;
    outcome.id = std::filesystem::path(input_files[i]).filename().string();
    outcome.ok = slot.ok;
    outcome.error = slot.error;
    outcome.millis = slot.millis;
    if (!slot.ok) {
      ++report.failed_documents;
      ++report.failure_types[slot.error.substr(0, slot.error.find(':'))];
      report.documents.push_back(std::move(outcome));
      continue;
    }
    std::size_t written = 0;
    for (const SuperconRecord& record : slot.records) {
      std::string tc_key =
          record.critical_temperature_kelvin
              ? format_double(*record.critical_temperature_kelvin)
              : record.critical_temperature;
      std::string key = record.hash + "\x1f" + record.raw_material + "\x1f" +
                        tc_key;
      if (!seen.insert(key).second) continue;
      database << record_to_json(record).dump() << "\n";
      ++written;
    }
    outcome.record_count = written;
    report.total_records += written;
    ++report.ok_documents;
    report.documents.push_back(std::move(outcome));
  }
  return report;
}

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json documents = nlohmann::json::array();
  for (const DocumentOutcome& outcome : report.documents) {
    nlohmann::json row{{"id", outcome.id},
                       {"status", outcome.ok ? "ok" : "failed"},
                       {"records", outcome.record_count},
                       {"ms", outcome.millis}};
    if (!outcome.ok) row["error"] = outcome.error;
    documents.push_back(std::move(row));
  }
  return nlohmann::json{
      {"documents", documents},
      {"totals",
       {{"documents", report.documents.size()},
        {"ok", report.ok_documents},
        {"failed", report.failed_documents},
        {"records", report.total_records}}},
      {"failure_types", report.failure_types}};
}

}  // namespace supercon
