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
#include <string_view>

namespace supercon {

enum class TcReason {
  linked_tc_expression,
  standard_term,
  rejected_non_tc_keyword,
  rejected_relative,
  rejected_width,
  rejected_negation,
  no_evidence
};

/// Whether a tcValue denotes a superconducting critical temperature.
/// accepted is true exactly for the two acceptance reasons.
struct TcDecision {
  bool accepted = false;
  TcReason reason = TcReason::no_evidence;
  std::string evidence;  // matched term or tc-expression surface, if any

  static TcDecision make(TcReason reason, std::string evidence = {});

  bool operator==(const TcDecision&) const = default;
};

std::string_view to_string(TcReason reason);
std::optional<TcReason> tc_reason_from(std::string_view name);

}  // namespace supercon
