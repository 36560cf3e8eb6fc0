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
#include <string>

#include "supercon/labels.hpp"
#include "supercon/material.hpp"
#include "supercon/quantity.hpp"
#include "supercon/span.hpp"
#include "supercon/tc_decision.hpp"

namespace supercon {

/// A labeled span in a sentence. The surface must equal the sentence text
/// at the span; attribute payloads exist only for the labels that define
/// them (tcValue/pressure carry a quantity, material a parsed material,
/// tcValue additionally a Tc decision once classified).
struct Entity {
  Span span;
  SuperconLabel label = SuperconLabel::material;
  std::string surface;
  std::optional<Quantity> quantity;
  std::optional<AnalyzedMaterial> material;
  std::optional<TcDecision> tc_decision;

  bool operator==(const Entity&) const = default;
};

}  // namespace supercon
