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

#include "httplib.h"
#include "supercon/pipeline.hpp"

namespace supercon {

/// Installs the processing endpoints on a server:
///   POST /process  text/plain body, or JSON {"text": ..., "timestamp"?}
///                  -> the render_extraction JSON (400 on bad payload)
///   GET  /health   -> 200 "ok"
/// Handlers are stateless; the config is read-only shared state, so
/// concurrent requests are independent. A pinned timestamp in the JSON
/// payload makes the response byte-identical to `extract` on the same
/// input.
void register_routes(httplib::Server& server, const PipelineConfig& config);

}  // namespace supercon
