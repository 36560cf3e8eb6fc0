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

#include "supercon/aggregator.hpp"
#include "supercon/document.hpp"
#include "supercon/lexicon.hpp"
#include "supercon/linker.hpp"
#include "supercon/material.hpp"
#include "supercon/tc_classifier.hpp"

namespace supercon {

/// All pipeline inputs resolved and parsed. Construction validates every
/// referenced file; a bad path or unparseable rule fails at startup, not
/// mid-run.
struct PipelineConfig {
  Lexicon lexicon;
  NameLookup names;
  TaxonomyRules taxonomy;
  TcTermList tc_terms;
  PenaltyTerms penalties;
  int tc_window = -1;  // acceptance-term window in characters; <0 = sentence
  int workers = 1;
  ExportFormat format = ExportFormat::csv;

  /// Built-in data (identical to the files under data/), with the
  /// name-lookup entries also registered as material lexicon terms.
  static PipelineConfig defaults();

  /// JSON config file; any omitted path falls back to the built-in data.
  /// Keys: lexicon, name_lookup, taxonomy, tc_terms, penalty_terms,
  /// workers, format, tc_window.
  static PipelineConfig from_file(const std::string& path);
};

/// Runs tagging (skipped when the document already carries entities),
/// stream merging, attribute enrichment, Tc classification, and linking,
/// in place.
void annotate_document(AnnotatedDocument& document,
                       const PipelineConfig& config);

/// Document-level aggregation into schema rows.
std::vector<SuperconRecord> records_for(const AnnotatedDocument& document);

struct ExtractionResult {
  AnnotatedDocument document;
  std::vector<SuperconRecord> records;
};

/// Full pipeline over raw text (one paragraph per line).
ExtractionResult process_text(const std::string& id, std::string_view text,
                              const PipelineConfig& config,
                              const std::string& timestamp);

/// Stable JSON rendering of an extraction: {"document": ..., "records":
/// [...]}. cmd-line extraction and the HTTP endpoint both return exactly
/// this string.
std::string render_extraction(const ExtractionResult& result);

/// Map function for process_corpus: reads one .txt or canonical .json
/// document, runs the pipeline, and returns its records. A canonical
/// document that already has entities is treated as gold annotation.
MapFunction make_map_function(const PipelineConfig& config,
                              const std::optional<std::string>& timestamp);

}  // namespace supercon
