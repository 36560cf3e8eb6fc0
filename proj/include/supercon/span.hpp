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

#include <compare>
#include <cstdint>

namespace supercon {

/// Half-open character range [start, end) in code-point offsets, relative
/// to the text that contains it (sentence text for entities).
struct Span {
  std::int32_t start = 0;
  std::int32_t end = 0;

  std::int32_t length() const { return end - start; }

  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }

  auto operator<=>(const Span&) const = default;
};

}  // namespace supercon
