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

#include <string>
#include <string_view>

namespace supercon {

/// SHA-256 of the raw bytes, lowercase hex.
std::string sha256_hex(std::string_view bytes);

/// Current UTC time as ISO-8601 ("2024-05-01T12:00:00Z").
std::string utc_timestamp();

}  // namespace supercon
