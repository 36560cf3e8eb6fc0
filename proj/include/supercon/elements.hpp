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

#include <string>
#include <string_view>

namespace supercon {

/// True for the 118 IUPAC element symbols, case-sensitive ("Fe", not "FE").
bool is_element_symbol(std::string_view symbol);

/// True for elements conventionally counted as metals; metalloids (B, Si,
/// Ge, As, Sb, Te) and non-metals return false.
bool is_metal(std::string_view symbol);

}  // namespace supercon
