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

#include "supercon/tc_decision.hpp"

#include <array>

namespace supercon {

TcDecision TcDecision::make(TcReason reason, std::string evidence) {
  TcDecision decision;
  decision.reason = reason;
  decision.accepted = reason == TcReason::linked_tc_expression ||
                      reason == TcReason::standard_term;
  decision.evidence = std::move(evidence);
  return decision;
}

namespace {
constexpr std::array<std::pair<TcReason, std::string_view>, 7> kNames = {{
    {TcReason::linked_tc_expression, "linked_tc_expression"},
    {TcReason::standard_term, "standard_term"},
    {TcReason::rejected_non_tc_keyword, "rejected_non_tc_keyword"},
    {TcReason::rejected_relative, "rejected_relative"},
    {TcReason::rejected_width, "rejected_width"},
    {TcReason::rejected_negation, "rejected_negation"},
    {TcReason::no_evidence, "no_evidence"},
}};
}  // namespace

std::string_view to_string(TcReason reason) {
  for (auto& [value, name] : kNames)
    if (value == reason) return name;
  return "no_evidence";
}

std::optional<TcReason> tc_reason_from(std::string_view name) {
  for (auto& [value, text] : kNames)
    if (text == name) return value;
  return std::nullopt;
}

}  // namespace supercon
