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

#include "supercon/labels.hpp"

namespace supercon {

std::string_view to_string(SuperconLabel label) {
  switch (label) {
    case SuperconLabel::material: return "material";
    case SuperconLabel::clazz: return "class";
    case SuperconLabel::tc_value: return "tcValue";
    case SuperconLabel::tc: return "tc";
    case SuperconLabel::me_method: return "me_method";
    case SuperconLabel::pressure: return "pressure";
  }
  return "material";
}

std::string_view to_string(MaterialLabel label) {
  switch (label) {
    case MaterialLabel::name: return "name";
    case MaterialLabel::formula: return "formula";
    case MaterialLabel::doping: return "doping";
    case MaterialLabel::shape: return "shape";
    case MaterialLabel::variable: return "variable";
    case MaterialLabel::value: return "value";
    case MaterialLabel::substrate: return "substrate";
    case MaterialLabel::fabrication: return "fabrication";
  }
  return "name";
}

std::string_view to_string(Subsection subsection) {
  switch (subsection) {
    case Subsection::title: return "title";
    case Subsection::abstract: return "abstract";
    case Subsection::paragraph: return "paragraph";
    case Subsection::figure_caption: return "figure_caption";
    case Subsection::table_caption: return "table_caption";
    case Subsection::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<SuperconLabel> supercon_label_from(std::string_view name) {
  for (SuperconLabel label : kAllSuperconLabels)
    if (to_string(label) == name) return label;
  return std::nullopt;
}

std::optional<MaterialLabel> material_label_from(std::string_view name) {
  for (MaterialLabel label : kAllMaterialLabels)
    if (to_string(label) == name) return label;
  return std::nullopt;
}

std::optional<Subsection> subsection_from(std::string_view name) {
  for (Subsection subsection : kAllSubsections)
    if (to_string(subsection) == name) return subsection;
  return std::nullopt;
}

}  // namespace supercon
