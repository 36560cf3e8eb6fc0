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

#include "supercon/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "supercon/utf8.hpp"

namespace supercon::eval {

namespace {

void finalize(LabelScore& score) {
  score.precision =
      (score.tp + score.fp) > 0
          ? 100.0 * static_cast<double>(score.tp) / (score.tp + score.fp)
          : 0.0;
  score.recall =
      (score.tp + score.fn) > 0
          ? 100.0 * static_cast<double>(score.tp) / (score.tp + score.fn)
          : 0.0;
  score.f1 = (score.precision + score.recall) > 0.0
                 ? 2.0 * score.precision * score.recall /
                       (score.precision + score.recall)
                 : 0.0;
}

using AlignedPair = std::pair<const AnnotatedDocument*,
                              const AnnotatedDocument*>;

std::vector<AlignedPair> align(const std::vector<AnnotatedDocument>& gold,
                               const std::vector<AnnotatedDocument>& predicted) {
  std::map<std::string, const AnnotatedDocument*> by_id;
  for (const AnnotatedDocument& document : predicted) {
    if (!by_id.emplace(document.id, &document).second)
      throw std::runtime_error("predicted corpus has duplicate document id '" +
                               document.id + "'");
  }
  std::vector<AlignedPair> pairs;
  std::set<std::string> gold_ids;
  for (const AnnotatedDocument& document : gold) {
    if (!gold_ids.insert(document.id).second)
      throw std::runtime_error("gold corpus has duplicate document id '" +
                               document.id + "'");
    auto hit = by_id.find(document.id);
    if (hit == by_id.end())
      throw std::runtime_error("document '" + document.id +
                               "' missing from predicted corpus");
    if (document.sentences.size() != hit->second->sentences.size())
      throw std::runtime_error(
          "document '" + document.id + "' sentence count differs: gold " +
          std::to_string(document.sentences.size()) + ", predicted " +
          std::to_string(hit->second->sentences.size()));
    pairs.emplace_back(&document, hit->second);
  }
  for (const AnnotatedDocument& document : predicted)
    if (!gold_ids.count(document.id))
      throw std::runtime_error("document '" + document.id +
                               "' missing from gold corpus");
  return pairs;
}

std::string normalize_surface(std::string_view surface) {
  std::u32string decoded = utf8::decode(surface);
  std::u32string out;
  bool pending_space = false;
  for (char32_t cp : decoded) {
    if (utf8::is_space(cp)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out += U' ';
      pending_space = false;
    }
    out += cp;
  }
  return utf8::encode(out);
}

}  // namespace

EvalReport score_ner(const std::vector<AnnotatedDocument>& gold,
                     const std::vector<AnnotatedDocument>& predicted,
                     const std::optional<std::set<Subsection>>& filter) {
  EvalReport report;
  for (SuperconLabel label : kAllSuperconLabels)
    report.per_label[std::string(to_string(label))] = LabelScore{};

  for (const auto& [gold_doc, pred_doc] : align(gold, predicted)) {
    for (std::size_t s = 0; s < gold_doc->sentences.size(); ++s) {
      const Sentence& gold_sentence = gold_doc->sentences[s];
      const Sentence& pred_sentence = pred_doc->sentences[s];
      if (filter && !filter->count(gold_sentence.subsection)) continue;

      using Key = std::pair<Span, SuperconLabel>;
      std::set<Key> gold_keys;
      std::set<Key> pred_keys;
      for (const Entity& entity : gold_sentence.entities)
        gold_keys.emplace(entity.span, entity.label);
      for (const Entity& entity : pred_sentence.entities)
        pred_keys.emplace(entity.span, entity.label);

      for (const Key& key : gold_keys) {
        LabelScore& score =
            report.per_label[std::string(to_string(key.second))];
        ++score.support;
        if (pred_keys.count(key))
          ++score.tp;
        else
          ++score.fn;
      }
      for (const Key& key : pred_keys)
        if (!gold_keys.count(key))
          ++report.per_label[std::string(to_string(key.second))].fp;
    }
  }

  for (auto& [label, score] : report.per_label) {
    finalize(score);
    report.micro.tp += score.tp;
    report.micro.fp += score.fp;
    report.micro.fn += score.fn;
    report.micro.support += score.support;
  }
  finalize(report.micro);
  return report;
}

EvalReport score_links(const std::vector<AnnotatedDocument>& gold,
                       const std::vector<AnnotatedDocument>& predicted) {
  EvalReport report;
  for (LinkType type :
       {LinkType::material_tc_value, LinkType::tc_value_pressure,
        LinkType::me_method_tc_value})
    report.per_label[std::string(to_string(type))] = LabelScore{};

  for (const auto& [gold_doc, pred_doc] : align(gold, predicted)) {
    for (std::size_t s = 0; s < gold_doc->sentences.size(); ++s) {
      using Key = std::tuple<LinkType, Span, SuperconLabel, Span,
                             SuperconLabel>;
      auto keys_of = [](const Sentence& sentence) {
        std::set<Key> keys;
        for (const Link& link : sentence.links)
          keys.emplace(link.type, link.source.span, link.source.label,
                       link.target.span, link.target.label);
        return keys;
      };
      std::set<Key> gold_keys = keys_of(gold_doc->sentences[s]);
      std::set<Key> pred_keys = keys_of(pred_doc->sentences[s]);

      for (const Key& key : gold_keys) {
        LabelScore& score =
            report.per_label[std::string(to_string(std::get<0>(key)))];
        ++score.support;
        if (pred_keys.count(key))
          ++score.tp;
        else
          ++score.fn;
      }
      for (const Key& key : pred_keys)
        if (!gold_keys.count(key))
          ++report.per_label[std::string(to_string(std::get<0>(key)))].fp;
    }
  }

  for (auto& [type, score] : report.per_label) {
    finalize(score);
    report.micro.tp += score.tp;
    report.micro.fp += score.fp;
    report.micro.fn += score.fn;
    report.micro.support += score.support;
  }
  finalize(report.micro);
  return report;
}

namespace {

using SurfaceSets = std::map<std::string, std::set<std::string>>;

SetStats collect_stats(const std::vector<AnnotatedDocument>& documents,
                       SurfaceSets* surfaces) {
  SetStats stats;
  stats.documents = static_cast<long>(documents.size());
  for (const AnnotatedDocument& document : documents) {
    for (const Sentence& sentence : document.sentences) {
      ++stats.examples;
      if (sentence.entities.empty())
        ++stats.negative_examples;
      else
        ++stats.positive_examples;
      for (const Entity& entity : sentence.entities) {
        ++stats.entities;
        std::string label(to_string(entity.label));
        ++stats.per_label[label];
        (*surfaces)[label].insert(normalize_surface(entity.surface));
      }
    }
  }
  for (const auto& [label, set] : *surfaces) {
    stats.per_label_unique[label] = static_cast<long>(set.size());
    stats.unique_entities += static_cast<long>(set.size());
  }
  return stats;
}

std::map<std::string, double> variability(const SetStats& stats) {
  std::map<std::string, double> out;
  for (const auto& [label, total] : stats.per_label) {
    long unique = 0;
    if (auto hit = stats.per_label_unique.find(label);
        hit != stats.per_label_unique.end())
      unique = hit->second;
    out[label] = total > 0 ? 100.0 * unique / total : 0.0;
  }
  return out;
}

}  // namespace

CorpusStats corpus_stats(const std::vector<AnnotatedDocument>& training,
                         const std::vector<AnnotatedDocument>& holdout) {
  CorpusStats stats;
  SurfaceSets training_surfaces;
  SurfaceSets holdout_surfaces;
  stats.training = collect_stats(training, &training_surfaces);
  stats.holdout = collect_stats(holdout, &holdout_surfaces);

  long unseen_total = 0;
  long unique_total = 0;
  for (const auto& [label, surfaces] : holdout_surfaces) {
    long unseen = 0;
    const std::set<std::string>* seen = nullptr;
    if (auto hit = training_surfaces.find(label);
        hit != training_surfaces.end())
      seen = &hit->second;
    for (const std::string& surface : surfaces)
      if (!seen || !seen->count(surface)) ++unseen;
    stats.out_of_domain_pct[label] =
        surfaces.empty() ? 0.0 : 100.0 * unseen / surfaces.size();
    unseen_total += unseen;
    unique_total += static_cast<long>(surfaces.size());
  }
  stats.out_of_domain_overall_pct =
      unique_total > 0 ? 100.0 * unseen_total / unique_total : 0.0;
  stats.training_variability_pct = variability(stats.training);
  stats.holdout_variability_pct = variability(stats.holdout);
  return stats;
}

const std::vector<std::string>& error_type_names() {
  static const std::vector<std::string> names = {
      "from_table", "extraction", "quantity_extraction", "tc_classification",
      "linking"};
  return names;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

bool parse_bool(const std::string& text, int line_number) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw std::runtime_error("marked records line " +
                           std::to_string(line_number) +
                           ": unreadable valid flag '" + text + "'");
}

}  // namespace

std::vector<MarkedRecord> parse_marked_records(std::string_view csv_content) {
  std::vector<MarkedRecord> records;
  std::istringstream stream{std::string(csv_content)};
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (line_number == 1 && !cells.empty() && cells[0] == "record_id")
      continue;  // header
    if (cells.size() != 4)
      throw std::runtime_error("marked records line " +
                               std::to_string(line_number) +
                               ": expected 4 columns, found " +
                               std::to_string(cells.size()));
    MarkedRecord record;
    record.record_id = cells[0];
    record.valid = parse_bool(cells[1], line_number);
    record.error_type = cells[2] == "-" ? "" : cells[2];
    record.subsection = cells[3];
    if (!record.valid) {
      const auto& names = error_type_names();
      if (std::find(names.begin(), names.end(), record.error_type) ==
          names.end())
        throw std::runtime_error("marked records line " +
                                 std::to_string(line_number) +
                                 ": unknown error type '" + record.error_type +
                                 "'");
    }
    records.push_back(std::move(record));
  }
  return records;
}

PrecisionSummary tally_errors(const std::vector<MarkedRecord>& records) {
  PrecisionSummary summary;
  for (const std::string& name : error_type_names())
    summary.errors.counts[name] = 0;

  for (const MarkedRecord& record : records) {
    auto& [valid, total] = summary.per_subsection[record.subsection];
    ++total;
    if (record.valid)
      ++valid;
    else
      ++summary.errors.counts[record.error_type];
  }

  auto micro = [&](bool exclude_figures, bool exclude_unknown) {
    long valid = 0;
    long total = 0;
    for (const auto& [subsection, counts] : summary.per_subsection) {
      if (exclude_figures && subsection == "figure_caption") continue;
      if (exclude_unknown && subsection == "unknown") continue;
      valid += counts.first;
      total += counts.second;
    }
    return total > 0 ? 100.0 * valid / total : 0.0;
  };
  summary.micro_pct = micro(false, false);
  summary.micro_excl_figures_pct = micro(true, false);
  summary.micro_excl_unknown_pct = micro(false, true);
  summary.micro_excl_both_pct = micro(true, true);
  return summary;
}

nlohmann::json report_to_json(const EvalReport& report) {
  auto score_json = [](const LabelScore& score) {
    return nlohmann::json{{"precision", score.precision},
                          {"recall", score.recall},
                          {"f1", score.f1},
                          {"support", score.support},
                          {"tp", score.tp},
                          {"fp", score.fp},
                          {"fn", score.fn}};
  };
  nlohmann::json labels;
  for (const auto& [label, score] : report.per_label)
    labels[label] = score_json(score);
  return nlohmann::json{{"labels", labels},
                        {"micro_avg", score_json(report.micro)}};
}

nlohmann::json stats_to_json(const CorpusStats& stats) {
  auto set_json = [](const SetStats& set) {
    return nlohmann::json{{"documents", set.documents},
                          {"examples", set.examples},
                          {"entities", set.entities},
                          {"unique_entities", set.unique_entities},
                          {"positive_examples", set.positive_examples},
                          {"negative_examples", set.negative_examples},
                          {"per_label", set.per_label},
                          {"per_label_unique", set.per_label_unique}};
  };
  return nlohmann::json{
      {"training", set_json(stats.training)},
      {"holdout", set_json(stats.holdout)},
      {"out_of_domain_pct", stats.out_of_domain_pct},
      {"out_of_domain_overall_pct", stats.out_of_domain_overall_pct},
      {"training_variability_pct", stats.training_variability_pct},
      {"holdout_variability_pct", stats.holdout_variability_pct}};
}

nlohmann::json summary_to_json(const PrecisionSummary& summary) {
  nlohmann::json subsections;
  for (const auto& [subsection, counts] : summary.per_subsection)
    subsections[subsection] = {{"valid", counts.first},
                               {"total", counts.second},
                               {"precision",
                                counts.second > 0
                                    ? 100.0 * counts.first / counts.second
                                    : 0.0}};
  return nlohmann::json{
      {"subsections", subsections},
      {"micro_avg", summary.micro_pct},
      {"micro_avg_excl_figures", summary.micro_excl_figures_pct},
      {"micro_avg_excl_unknown", summary.micro_excl_unknown_pct},
      {"micro_avg_excl_figures_and_unknown", summary.micro_excl_both_pct},
      {"error_types", summary.errors.counts}};
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "label" << std::right << std::setw(10)
      << "precision" << std::setw(10) << "recall" << std::setw(10) << "f1"
      << std::setw(10) << "support" << "\n";
  auto row = [&](const std::string& label, const LabelScore& score) {
    out << std::left << std::setw(22) << label << std::right << std::fixed
        << std::setprecision(2) << std::setw(10) << score.precision
        << std::setw(10) << score.recall << std::setw(10) << score.f1
        << std::setw(10) << score.support << "\n";
  };
  for (const auto& [label, score] : report.per_label) row(label, score);
  row("all (micro avg)", report.micro);
  return out.str();
}

}  // namespace supercon::eval
