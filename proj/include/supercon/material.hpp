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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercon/composition.hpp"
#include "supercon/span.hpp"

namespace supercon {

/// A segmented field of a material surface, with its location in the raw
/// surface (code-point offsets).
struct FieldSlice {
  std::string text;
  Span span;

  bool operator==(const FieldSlice&) const = default;
};

/// Structured view of one material mention ("2% Zn-doped MgB2 single
/// crystal"). Fields are optional; anything unexplained lands in
/// fabrication.
struct MaterialStructure {
  std::string raw;
  std::optional<FieldSlice> name;
  std::optional<FieldSlice> formula;
  std::optional<FieldSlice> doping;
  std::optional<FieldSlice> shape;
  std::optional<FieldSlice> substrate;
  std::optional<FieldSlice> fabrication;
  std::map<std::string, std::vector<std::string>> variables;
  std::vector<std::string> notes;  // ambiguity remarks, e.g. clashing values
  bool low_confidence = false;     // neither name nor formula found

  bool operator==(const MaterialStructure&) const = default;
};

/// A formula with all substitution variables replaced: "La4Fe2A1-xO7"
/// with A=Mg, x=0.1 becomes "La4Fe2Mg0.9O7".
struct ResolvedFormula {
  std::string formula;
  Composition composition;
  std::map<std::string, std::string> assignment;

  bool operator==(const ResolvedFormula&) const = default;
};

/// Segments a raw material surface into Table-style fields. Never fails:
/// unrecognized content becomes fabrication and low_confidence is set
/// when no name or formula was found.
MaterialStructure parse_material(std::string_view surface);

/// True when the text (parens included) is a substitution-variable
/// assignment list: "(A=Mg,Co; x=0.1,0.2)".
bool is_variable_assignment_block(std::string_view text);

/// Word-bounded doping phrases ("2% Zn-doped", "overdoped") and shape
/// terms ("single crystal", "films") in arbitrary text, sorted by start.
/// The same scanners drive parse_material.
std::vector<Span> find_doping_phrases(std::string_view text);
std::vector<Span> find_shape_terms(std::string_view text);

/// Cartesian expansion of the structure's substitution variables over the
/// formula. Variables without values stay symbolic. Output size is the
/// product of the value-list lengths of the variables that occur in the
/// formula.
std::vector<ResolvedFormula> substitute_variables(
    const MaterialStructure& structure);

/// Material-name to formula lookup ("hydrogen" -> "H"). Exact
/// case-normalized hits only; never guesses.
class NameLookup {
 public:
  static NameLookup parse(std::string_view content);
  static NameLookup load(const std::string& path);

  std::optional<std::string> find(std::string_view name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string> entries_;  // key lower-cased
};

/// Element-set predicate rules mapping compositions to class tags.
/// Line format: tag <TAB> expression, where the expression grammar is
///   expr  := or ; or := and ('|' and)* ; and := not ('&' not)*
///   not   := '!' not | '(' expr ')' | atom
///   atom  := Element | Element:number | metals-only | elements>=N
class TaxonomyRules {
 public:
  static TaxonomyRules parse(std::string_view content);
  static TaxonomyRules load(const std::string& path);

  /// Multi-label classification; tags come back in rule-file order.
  std::vector<std::string> classify(const Composition& composition) const;

  std::size_t size() const { return rules_.size(); }

  struct Node;

 private:
  struct Rule {
    std::string tag;
    std::shared_ptr<Node> predicate;
  };
  std::vector<Rule> rules_;
};

std::vector<std::string> classify(const Composition& composition,
                                  const TaxonomyRules& rules);

/// Full material analysis as used by the pipeline: segmentation, formula
/// decomposition (falling back to name lookup), classification, and
/// variable substitution.
struct AnalyzedMaterial {
  MaterialStructure structure;
  std::optional<Composition> composition;
  std::vector<std::string> classes;
  std::vector<ResolvedFormula> resolved;

  bool operator==(const AnalyzedMaterial&) const = default;
};

AnalyzedMaterial analyze_material(std::string_view surface,
                                  const NameLookup& lookup,
                                  const TaxonomyRules& taxonomy);

}  // namespace supercon
