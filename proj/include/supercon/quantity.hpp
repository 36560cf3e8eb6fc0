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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercon/span.hpp"

namespace supercon {

enum class QuantityKind { temperature, pressure };

/// Qualifier attached to a value: "above 100K" keeps its bound direction.
enum class Qualifier { none, greater, less, approx };

std::string_view to_string(QuantityKind kind);
std::string_view to_string(Qualifier qualifier);
std::optional<QuantityKind> quantity_kind_from(std::string_view name);
std::optional<Qualifier> qualifier_from(std::string_view name);

/// Parsed temperature or pressure expression. Single values leave
/// value_high empty; ranges ("30-35 K") fill it. Normalized values are
/// kelvin for temperatures and GPa for pressures.
struct Quantity {
  QuantityKind kind = QuantityKind::temperature;
  Qualifier qualifier = Qualifier::none;
  double value = 0.0;
  std::optional<double> value_high;
  std::string unit;
  double normalized = 0.0;
  std::optional<double> normalized_high;

  bool is_interval() const { return value_high.has_value(); }

  /// Midpoint of the normalized interval; the value itself when single.
  double normalized_midpoint() const;

  bool operator==(const Quantity&) const = default;
};

class QuantityParseError : public std::runtime_error {
 public:
  explicit QuantityParseError(const std::string& reason)
      : std::runtime_error(reason) {}
};

/// Parses a quantity surface ("39 K", "above 100K", "20 kbar", "30-35 K").
/// Throws QuantityParseError when no number is found, the unit is outside
/// the documented set {K, mK, °C, GPa, MPa, kbar, bar, Pa}, or a kelvin
/// value is negative.
Quantity parse_quantity(std::string_view surface);

std::optional<Quantity> try_parse_quantity(std::string_view surface);

/// A quantity found inside running text, with its code-point span.
struct QuantityMatch {
  Span span;
  Quantity quantity;

  bool operator==(const QuantityMatch&) const = default;
};

/// Scans decoded sentence text for temperature and pressure expressions,
/// left to right, non-overlapping. Qualifier words directly before the
/// number ("above 100K") are included in the match.
std::vector<QuantityMatch> scan_quantities(const std::u32string& text);

}  // namespace supercon
