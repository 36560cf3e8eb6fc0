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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "supercon/document.hpp"

namespace supercon::eval {

/// Strict-span scores in percent. precision is defined as 0 when there
/// are no predictions; f1 = 2PR/(P+R) when P+R > 0, else 0.
struct LabelScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long support = 0;  // gold count
  long tp = 0;
  long fp = 0;
  long fn = 0;
};

struct EvalReport {
  std::map<std::string, LabelScore> per_label;
  LabelScore micro;
};

/// Strict (span, label) matching between corpora aligned by document id
/// and sentence index; throws naming the first mismatch when alignment
/// fails. The optional filter restricts scoring to sentences of the
/// given subsections.
EvalReport score_ner(
    const std::vector<AnnotatedDocument>& gold,
    const std::vector<AnnotatedDocument>& predicted,
    const std::optional<std::set<Subsection>>& filter = std::nullopt);

/// Link evaluation: a predicted link is correct iff its type and both
/// endpoints (span + label) match a gold link in the same document and
/// sentence. Keys of per_label are the link-type names.
EvalReport score_links(const std::vector<AnnotatedDocument>& gold,
                       const std::vector<AnnotatedDocument>& predicted);

struct SetStats {
  long documents = 0;
  long examples = 0;  // sentences
  long entities = 0;
  long unique_entities = 0;
  long positive_examples = 0;
  long negative_examples = 0;
  std::map<std::string, long> per_label;
  std::map<std::string, long> per_label_unique;
};

/// Training/holdout corpus statistics. The out-of-domain ratio of a
/// label is the share of unique holdout surfaces never seen in training;
/// label variability is unique/total. Surfaces are whitespace-normalized
/// and case-sensitive.
struct CorpusStats {
  SetStats training;
  SetStats holdout;
  std::map<std::string, double> out_of_domain_pct;
  double out_of_domain_overall_pct = 0.0;
  std::map<std::string, double> training_variability_pct;
  std::map<std::string, double> holdout_variability_pct;
};

CorpusStats corpus_stats(const std::vector<AnnotatedDocument>& training,
                         const std::vector<AnnotatedDocument>& holdout);

/// The five end-to-end error types.
extern const std::vector<std::string>& error_type_names();

struct ErrorTypeTally {
  std::map<std::string, int> counts;  // keyed by the five names
};

struct MarkedRecord {
  std::string record_id;
  bool valid = false;
  std::string error_type;  // empty for valid records
  std::string subsection;
};

/// Parses the marked-records CSV (record_id, valid, error_type,
/// subsection). Unknown error types or malformed rows raise an error
/// naming the line.
std::vector<MarkedRecord> parse_marked_records(std::string_view csv_content);

struct PrecisionSummary {
  // subsection -> (valid, total)
  std::map<std::string, std::pair<long, long>> per_subsection;
  double micro_pct = 0.0;
  double micro_excl_figures_pct = 0.0;
  double micro_excl_unknown_pct = 0.0;
  double micro_excl_both_pct = 0.0;
  ErrorTypeTally errors;
};

PrecisionSummary tally_errors(const std::vector<MarkedRecord>& records);

nlohmann::json report_to_json(const EvalReport& report);
nlohmann::json stats_to_json(const CorpusStats& stats);
nlohmann::json summary_to_json(const PrecisionSummary& summary);

/// Human-readable fixed-width table of an EvalReport.
std::string format_report(const EvalReport& report);

}  // namespace supercon::eval
