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

#include "supercon/links.hpp"

namespace supercon {

std::string_view to_string(LinkType type) {
  switch (type) {
    case LinkType::material_tc_value: return "material-tcValue";
    case LinkType::tc_value_pressure: return "tcValue-pressure";
    case LinkType::me_method_tc_value: return "me_method-tcValue";
  }
  return "material-tcValue";
}

std::string_view to_string(LinkMethod method) {
  switch (method) {
    case LinkMethod::pair_rule: return "pair_rule";
    case LinkMethod::order_linking: return "order_linking";
    case LinkMethod::distance_linking: return "distance_linking";
  }
  return "pair_rule";
}

std::optional<LinkType> link_type_from(std::string_view name) {
  if (name == "material-tcValue") return LinkType::material_tc_value;
  if (name == "tcValue-pressure") return LinkType::tc_value_pressure;
  if (name == "me_method-tcValue") return LinkType::me_method_tc_value;
  return std::nullopt;
}

std::optional<LinkMethod> link_method_from(std::string_view name) {
  if (name == "pair_rule") return LinkMethod::pair_rule;
  if (name == "order_linking") return LinkMethod::order_linking;
  if (name == "distance_linking") return LinkMethod::distance_linking;
  return std::nullopt;
}

SuperconLabel source_label(LinkType type) {
  switch (type) {
    case LinkType::material_tc_value: return SuperconLabel::material;
    case LinkType::tc_value_pressure: return SuperconLabel::tc_value;
    case LinkType::me_method_tc_value: return SuperconLabel::me_method;
  }
  return SuperconLabel::material;
}

SuperconLabel target_label(LinkType type) {
  switch (type) {
    case LinkType::material_tc_value: return SuperconLabel::tc_value;
    case LinkType::tc_value_pressure: return SuperconLabel::pressure;
    case LinkType::me_method_tc_value: return SuperconLabel::tc_value;
  }
  return SuperconLabel::tc_value;
}

}  // namespace supercon
