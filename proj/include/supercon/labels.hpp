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

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace supercon {

/// Labels produced by the superconductors layer.
enum class SuperconLabel { material, clazz, tc_value, tc, me_method, pressure };

/// Labels produced by the material segmentation layer.
enum class MaterialLabel {
  name,
  formula,
  doping,
  shape,
  variable,
  value,
  substrate,
  fabrication
};

enum class Subsection {
  title,
  abstract,
  paragraph,
  figure_caption,
  table_caption,
  unknown
};

inline constexpr std::array<SuperconLabel, 6> kAllSuperconLabels = {
    SuperconLabel::material,  SuperconLabel::clazz, SuperconLabel::tc_value,
    SuperconLabel::tc,        SuperconLabel::me_method,
    SuperconLabel::pressure};

inline constexpr std::array<MaterialLabel, 8> kAllMaterialLabels = {
    MaterialLabel::name,     MaterialLabel::formula,
    MaterialLabel::doping,   MaterialLabel::shape,
    MaterialLabel::variable, MaterialLabel::value,
    MaterialLabel::substrate, MaterialLabel::fabrication};

inline constexpr std::array<Subsection, 6> kAllSubsections = {
    Subsection::title,          Subsection::abstract,
    Subsection::paragraph,      Subsection::figure_caption,
    Subsection::table_caption,  Subsection::unknown};

// Serialized names are the wire vocabulary; parsing an unknown name is an
// error, never a silent drop.
std::string_view to_string(SuperconLabel label);
std::string_view to_string(MaterialLabel label);
std::string_view to_string(Subsection subsection);

std::optional<SuperconLabel> supercon_label_from(std::string_view name);
std::optional<MaterialLabel> material_label_from(std::string_view name);
std::optional<Subsection> subsection_from(std::string_view name);

}  // namespace supercon
