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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercon/decimal.hpp"

namespace supercon {

/// One additive term of a stoichiometry expression: a signed number or a
/// signed substitution variable ("1-x" is [+1, -x]).
struct StoichTerm {
  int sign = 1;
  bool is_number = true;
  Decimal number;
  std::string variable;  // UTF-8; may be a Greek letter like δ

  bool operator==(const StoichTerm&) const = default;
};

/// Stoichiometry of one formula site: numeric ("2", "0.9") or symbolic
/// ("1-x", "4-δ"). An empty term list means the implicit 1.
struct Stoich {
  std::vector<StoichTerm> terms;

  static Stoich one();
  static Stoich from_decimal(Decimal value);

  bool is_numeric() const;
  bool is_one() const;

  /// Valid only when is_numeric().
  Decimal numeric_value() const;

  /// Normalized expression text: "2", "0.9", "2-x", "4-δ".
  std::string render() const;

  /// Replaces assigned variables with their numeric values and coalesces
  /// the numeric part. Unassigned variables stay symbolic.
  Stoich substitute(const std::map<std::string, Decimal>& assignment) const;

  std::optional<Decimal> evaluate(
      const std::map<std::string, Decimal>& assignment) const;

  /// Sum of two site stoichiometries (repeated element in a formula).
  Stoich plus(const Stoich& other) const;

  bool operator==(const Stoich&) const = default;
};

/// One site of a composition: an element symbol, or a substitution
/// variable standing in for one ("A" in La4Fe2A1-xO7).
struct CompositionEntry {
  std::string site;
  bool site_is_variable = false;
  Stoich stoich;

  bool operator==(const CompositionEntry&) const = default;
};

struct Composition {
  std::vector<CompositionEntry> entries;  // formula order preserved

  /// True when every site is a concrete element and every stoichiometry
  /// is numeric.
  bool resolved() const;

  const CompositionEntry* find(std::string_view site) const;

  /// Element-wise numeric equality within the given tolerance; false if
  /// either side is unresolved or the site sets differ.
  bool numerically_equal(const Composition& other, double tol = 1e-9) const;

  bool operator==(const Composition&) const = default;
};

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(const std::string& reason, std::string token)
      : std::runtime_error(reason), offending_token(std::move(token)) {}

  std::string offending_token;
};

/// Decomposes a formula string into element-stoichiometry pairs.
/// Whitespace is insignificant ("La 2-x Sr x CuO 4" equals
/// "La2-xSrxCuO4"); omitted stoichiometry counts as 1; symbolic
/// expressions are preserved. Throws DecompositionError on a token that
/// is neither an element, a number, an expression, nor a known variable.
Composition decompose_formula(std::string_view formula);

std::optional<Composition> try_decompose_formula(std::string_view formula);

/// Parses a stoichiometry expression on its own: "2", "0.9", "2-x".
std::optional<Stoich> parse_stoich(std::string_view text);

/// Renders a composition back to compact formula text, omitting
/// stoichiometry 1: {Mg:1, B:2} -> "MgB2".
std::string render_formula(const Composition& composition);

}  // namespace supercon
