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

#include "supercon/http_service.hpp"

#include "supercon/digest.hpp"

namespace supercon {

void register_routes(httplib::Server& server, const PipelineConfig& config) {
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });

  server.Post("/process", [&config](const httplib::Request& req,
                                    httplib::Response& res) {
    std::string text = req.body;
    std::string timestamp;
    std::string id = "stdin";  // matches the extract command's stdin default
    auto content_type = req.get_header_value("Content-Type");
    if (content_type.find("application/json") != std::string::npos) {
      try {
        nlohmann::json payload = nlohmann::json::parse(req.body);
        if (!payload.is_object() || !payload.contains("text") ||
            !payload["text"].is_string()) {
          res.status = 400;
          res.set_content(
              nlohmann::json{{"error", "expected {\"text\": ...}"}}.dump(),
              "application/json");
          return;
        }
        text = payload["text"].get<std::string>();
        timestamp = payload.value("timestamp", "");
        id = payload.value("id", "stdin");
      } catch (const nlohmann::json::exception&) {
        res.status = 400;
        res.set_content(
            nlohmann::json{{"error", "malformed JSON payload"}}.dump(),
            "application/json");
        return;
      }
    }
    if (text.empty()) {
      res.status = 400;
      res.set_content(nlohmann::json{{"error", "empty text"}}.dump(),
                      "application/json");
      return;
    }
    try {
      auto result = process_text(
          id, text, config, timestamp.empty() ? utc_timestamp() : timestamp);
      res.set_content(render_extraction(result), "application/json");
    } catch (const std::exception& error) {
      res.status = 500;
      res.set_content(nlohmann::json{{"error", error.what()}}.dump(),
                      "application/json");
    }
  });
}

}  // namespace supercon
