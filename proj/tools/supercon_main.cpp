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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "supercon/digest.hpp"
#include "supercon/eval.hpp"
#include "supercon/http_service.hpp"
#include "supercon/json_io.hpp"
#include "supercon/pipeline.hpp"
#include "supercon/tagger.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read input: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void reject_pdf(const std::string& path, const std::string& content) {
  bool looks_pdf = content.rfind("%PDF", 0) == 0;
  if (!looks_pdf && !path.empty()) {
    std::string lower = std::filesystem::path(path).extension().string();
    for (char& c : lower) c = static_cast<char>(std::tolower(c));
    looks_pdf = lower == ".pdf";
  }
  if (looks_pdf)
    throw std::invalid_argument(
        "PDF input is not supported: this tool processes plain text. "
        "Convert the document to text first and re-run.");
}

// Config problems exit with kExitConfig, not the generic failure code.
supercon::PipelineConfig load_config(const std::string& path) {
  try {
    if (path.empty()) return supercon::PipelineConfig::defaults();
    return supercon::PipelineConfig::from_file(path);
  } catch (const std::exception& error) {
    throw std::invalid_argument(std::string("config: ") + error.what());
  }
}

std::vector<supercon::AnnotatedDocument> load_corpus(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<supercon::AnnotatedDocument> documents;
  if (fs::is_directory(path)) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    for (const std::string& file : files)
      documents.push_back(supercon::io::load_document(file));
  } else {
    documents.push_back(supercon::io::load_document(path));
  }
  return documents;
}

void write_or_print(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write output: " + path);
  file << content;
}

int cmd_extract(const std::string& input, const std::string& gold,
                const std::string& config_path, const std::string& output,
                const std::string& export_path, const std::string& format_name,
                const std::string& timestamp) {
  supercon::PipelineConfig config = load_config(config_path);
  std::string text = read_input(input);
  reject_pdf(input, text);

  std::string id = input.empty() || input == "-"
                       ? "stdin"
                       : std::filesystem::path(input).stem().string();
  std::string stamp = timestamp.empty() ? supercon::utc_timestamp() : timestamp;

  supercon::ExtractionResult result;
  if (!gold.empty()) {
    std::ifstream gold_file(gold);
    if (!gold_file)
      throw std::runtime_error("cannot read annotations: " + gold);
    result.document = supercon::ingest_annotations(
        id, text, nlohmann::json::parse(gold_file));
    result.document.timestamp = stamp;
    supercon::annotate_document(result.document, config);
    result.records = supercon::records_for(result.document);
  } else {
    result = supercon::process_text(id, text, config, stamp);
  }

  write_or_print(supercon::render_extraction(result), output);
  if (!export_path.empty()) {
    auto format = supercon::export_format_from(
        format_name.empty() ? "csv" : format_name);
    if (!format)
      throw std::invalid_argument("unknown format '" + format_name + "'");
    std::ofstream file(export_path, std::ios::binary);
    if (!file)
      throw std::runtime_error("cannot write export: " + export_path);
    supercon::export_records(result.records, *format, file);
  }
  return 0;
}

int cmd_batch(const std::string& input_dir, const std::string& output,
              const std::string& report_path, const std::string& config_path,
              int workers, const std::string& timestamp,
              const std::string& export_path,
              const std::string& format_name) {
  supercon::PipelineConfig config = load_config(config_path);
  if (!std::filesystem::is_directory(input_dir))
    throw std::invalid_argument("input directory does not exist: " +
                                input_dir);
  auto format = config.format;
  if (!format_name.empty()) {
    auto parsed = supercon::export_format_from(format_name);
    if (!parsed)
      throw std::invalid_argument("unknown format '" + format_name + "'");
    format = *parsed;
  }

  std::optional<std::string> stamp;
  if (!timestamp.empty()) stamp = timestamp;
  auto files = supercon::corpus_files(input_dir);
  auto report = supercon::process_corpus(
      files, output, supercon::make_map_function(config, stamp),
      workers > 0 ? workers : config.workers);

  nlohmann::json report_json = supercon::report_to_json(report);
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file)
      throw std::runtime_error("cannot write report: " + report_path);
    file << report_json.dump(2) << "\n";
  }
  if (!export_path.empty()) {
    std::ofstream file(export_path, std::ios::binary);
    if (!file)
      throw std::runtime_error("cannot write export: " + export_path);
    supercon::export_records(supercon::load_database(output), format, file);
  }
  std::cerr << "processed " << report.documents.size() << " documents ("
            << report.ok_documents << " ok, " << report.failed_documents
            << " failed), " << report.total_records << " records -> "
            << output << "\n";
  return 0;
}

int cmd_eval(const std::string& gold_path, const std::string& pred_path,
             bool links, const std::string& out_path) {
  auto gold = load_corpus(gold_path);
  auto predicted = load_corpus(pred_path);
  supercon::eval::EvalReport report =
      links ? supercon::eval::score_links(gold, predicted)
            : supercon::eval::score_ner(gold, predicted);
  std::cout << supercon::eval::format_report(report);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot write report: " + out_path);
    file << supercon::eval::report_to_json(report).dump(2) << "\n";
  }
  return 0;
}

int cmd_stats(const std::string& train_path, const std::string& holdout_path,
              const std::string& out_path) {
  auto training = load_corpus(train_path);
  auto holdout = load_corpus(holdout_path);
  auto stats = supercon::eval::corpus_stats(training, holdout);
  std::string rendered = supercon::eval::stats_to_json(stats).dump(2) + "\n";
  write_or_print(rendered, out_path);
  return 0;
}

int cmd_serve(int port, const std::string& config_path) {
  supercon::PipelineConfig config = load_config(config_path);
  httplib::Server server;
  supercon::register_routes(server, config);
  std::cerr << "listening on 0.0.0.0:" << port << "\n";
  if (!server.listen("0.0.0.0", port))
    throw std::runtime_error("cannot bind port " + std::to_string(port));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract superconductor materials and properties from text"};
  app.require_subcommand(1);

  std::string input, gold, config_path, output, export_path, format, timestamp;
  auto* extract = app.add_subcommand(
      "extract", "Run the pipeline on one text document");
  extract->add_option("--input,-i", input, "input text file ('-' = stdin)");
  extract->add_option("--gold", gold,
                      "annotation JSON (skips the baseline tagger)");
  extract->add_option("--config", config_path, "pipeline config JSON");
  extract->add_option("--output,-o", output, "write the combined JSON here");
  extract->add_option("--export", export_path, "also export records here");
  extract->add_option("--format", format, "export format: csv|tsv|json");
  extract->add_option("--timestamp", timestamp,
                      "pin the processing timestamp (ISO-8601)");

  std::string batch_dir, batch_output, batch_report, batch_config,
      batch_timestamp, batch_export, batch_format;
  int batch_workers = 0;
  auto* batch =
      app.add_subcommand("batch", "Process a directory of documents");
  batch->add_option("input", batch_dir, "input directory")->required();
  batch->add_option("--output,-o", batch_output, "database file (NDJSON)")
      ->required();
  batch->add_option("--report", batch_report, "write the run report here");
  batch->add_option("--config", batch_config, "pipeline config JSON");
  batch->add_option("--workers,-w", batch_workers, "worker thread count");
  batch->add_option("--timestamp", batch_timestamp,
                    "pin the processing timestamp (ISO-8601)");
  batch->add_option("--export", batch_export,
                    "also derive a tabular export from the database");
  batch->add_option("--format", batch_format, "export format: csv|tsv|json");

  std::string eval_gold, eval_pred, eval_out;
  bool eval_links = false;
  auto* eval_cmd = app.add_subcommand(
      "eval", "Score predicted annotations against gold");
  eval_cmd->add_option("--gold", eval_gold, "gold corpus (file or dir)")
      ->required();
  eval_cmd->add_option("--pred", eval_pred, "predicted corpus (file or dir)")
      ->required();
  eval_cmd->add_flag("--links", eval_links, "score links instead of entities");
  eval_cmd->add_option("--out", eval_out, "write the JSON report here");

  std::string stats_train, stats_holdout, stats_out;
  auto* stats =
      app.add_subcommand("stats", "Training/holdout corpus statistics");
  stats->add_option("--train", stats_train, "training corpus (file or dir)")
      ->required();
  stats->add_option("--holdout", stats_holdout, "holdout corpus (file or dir)")
      ->required();
  stats->add_option("--out", stats_out, "write the JSON stats here");

  int port = 8060;
  std::string serve_config;
  auto* serve = app.add_subcommand("serve", "HTTP processing endpoint");
  serve->add_option("--port,-p", port, "listen port");
  serve->add_option("--config", serve_config, "pipeline config JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed())
      return cmd_extract(input, gold, config_path, output, export_path,
                         format, timestamp);
    if (batch->parsed())
      return cmd_batch(batch_dir, batch_output, batch_report, batch_config,
                       batch_workers, batch_timestamp, batch_export,
                       batch_format);
    if (eval_cmd->parsed())
      return cmd_eval(eval_gold, eval_pred, eval_links, eval_out);
    if (stats->parsed())
      return cmd_stats(stats_train, stats_holdout, stats_out);
    if (serve->parsed()) return cmd_serve(port, serve_config);
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
