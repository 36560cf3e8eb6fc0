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
#include <string_view>

#include "supercon/entity.hpp"

namespace supercon {

enum class LinkType { material_tc_value, tc_value_pressure, me_method_tc_value };

enum class LinkMethod { pair_rule, order_linking, distance_linking };

std::string_view to_string(LinkType type);
std::string_view to_string(LinkMethod method);
std::optional<LinkType> link_type_from(std::string_view name);
std::optional<LinkMethod> link_method_from(std::string_view name);

/// Expected entity labels for a link type's endpoints.
SuperconLabel source_label(LinkType type);
SuperconLabel target_label(LinkType type);

/// A typed pair of entities in one sentence. distance carries the
/// adjusted centroid distance and is present exactly for
/// distance_linking.
struct Link {
  LinkType type = LinkType::material_tc_value;
  Entity source;
  Entity target;
  LinkMethod method = LinkMethod::pair_rule;
  std::optional<std::int64_t> distance;

  bool operator==(const Link&) const = default;
};

}  // namespace supercon
