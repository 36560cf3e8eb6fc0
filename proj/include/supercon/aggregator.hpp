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

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "supercon/document.hpp"

namespace supercon {

/// One row of the tabular output: a material mention paired with its
/// linked critical temperature, plus pressure/method when their links
/// exist, the structured material fields, and document provenance.
struct SuperconRecord {
  std::string raw_material;
  std::string name;
  std::string formula;
  std::string doping;
  std::string shape;
  std::string variables;
  std::string material_class;
  std::string fabrication;
  std::string substrate;
  std::string critical_temperature;
  std::optional<double> critical_temperature_kelvin;
  std::string applied_pressure;
  std::optional<double> applied_pressure_gpa;
  std::string measurement_method;
  std::string section;
  std::string subsection;
  std::string authors;
  std::string title;
  std::string doi;
  std::string publisher;
  std::string journal;
  std::string year;
  std::string hash;
  std::string timestamp;
  int cluster_id = -1;

  bool operator==(const SuperconRecord&) const = default;
};

/// Column order of every tabular export.
const std::vector<std::string>& record_field_names();

nlohmann::json record_to_json(const SuperconRecord& record);
SuperconRecord record_from_json(const nlohmann::json& value);

/// Document-level aggregation of material mentions: two mentions belong
/// to the same cluster when their resolved composition sets intersect
/// (element-wise within 1e-9), taken to transitive closure.
struct MaterialCluster {
  int id = 0;
  // (sentence index, entity index) of each member, document order;
  // the first member is the representative.
  std::vector<std::pair<int, int>> mentions;
  std::vector<std::string> shared_formulas;
};

std::vector<MaterialCluster> cluster_materials(
    const AnnotatedDocument& document);

/// One record per material-tcValue link, with pressure and measurement
/// method attached via their tcValue-anchored links. Document order.
std::vector<SuperconRecord> build_records(
    const AnnotatedDocument& document,
    const std::vector<MaterialCluster>& clusters);

enum class ExportFormat { csv, tsv, json };
std::optional<ExportFormat> export_format_from(std::string_view name);
std::string_view to_string(ExportFormat format);

void export_records(const std::vector<SuperconRecord>& records,
                    ExportFormat format, std::ostream& out);
std::string export_records_string(const std::vector<SuperconRecord>& records,
                                  ExportFormat format);

/// Map-Reduce corpus processing. The map function turns one input file
/// into records (pure, run concurrently); the reduce phase concatenates
/// per-document results in sorted file order, dropping duplicate
/// (hash, raw_material, normalized Tc) rows. Per-document failures are
/// reported, never fatal. The database file is newline-delimited JSON
/// and is byte-identical for any worker count.
struct DocumentOutcome {
  std::string id;
  bool ok = false;
  std::string error;
  std::size_t record_count = 0;
  double millis = 0.0;
};

struct RunReport {
  std::vector<DocumentOutcome> documents;
  std::size_t total_records = 0;
  std::size_t ok_documents = 0;
  std::size_t failed_documents = 0;
  std::map<std::string, int> failure_types;
};

nlohmann::json report_to_json(const RunReport& report);

using MapFunction =
    std::function<std::vector<SuperconRecord>(const std::string& path)>;

RunReport process_corpus(const std::vector<std::string>& input_files,
                         const std::string& output_path,
                         const MapFunction& map_document, int workers);

/// Sorted list of the .txt/.json files under a directory.
std::vector<std::string> corpus_files(const std::string& input_dir);

/// Reads a newline-delimited JSON database back into records (tabular
/// exports are derived from it).
std::vector<SuperconRecord> load_database(const std::string& path);

}  // namespace supercon
