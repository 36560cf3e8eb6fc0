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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace supercon {

/// Exact decimal number: value = units / 10^scale. Stoichiometry
/// arithmetic (1 - 0.1 = 0.9) must render without float artifacts.
struct Decimal {
  std::int64_t units = 0;
  int scale = 0;

  static Decimal from_int(std::int64_t value) { return {value, 0}; }
  static std::optional<Decimal> parse(std::string_view text);

  Decimal normalized() const;
  Decimal operator+(const Decimal& other) const;
  Decimal operator-(const Decimal& other) const;
  Decimal operator-() const { return {-units, scale}; }

  bool operator==(const Decimal& other) const;
  bool is_negative() const { return units < 0; }

  double to_double() const;

  /// Renders with trailing zeros trimmed: {9,1} -> "0.9", {90,2} -> "0.9".
  std::string to_string() const;
};

}  // namespace supercon
