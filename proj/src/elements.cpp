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

#include "supercon/elements.hpp"

#include <unordered_set>

namespace supercon {

namespace {

const std::unordered_set<std::string>& element_symbols() {
  static const std::unordered_set<std::string> symbols = {
      "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
      "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
      "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
      "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
      "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
      "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
      "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
      "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
      "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
      "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};
  return symbols;
}

// Non-metals plus the usual metalloid set.
const std::unordered_set<std::string>& non_metal_symbols() {
  static const std::unordered_set<std::string> symbols = {
      "H",  "He", "B",  "C",  "N",  "O",  "F",  "Ne", "Si", "P",  "S",
      "Cl", "Ar", "Ge", "As", "Se", "Br", "Kr", "Sb", "Te", "I",  "Xe",
      "At", "Rn", "Og"};
  return symbols;
}

}  // namespace

bool is_element_symbol(std::string_view symbol) {
  return element_symbols().count(std::string(symbol)) > 0;
}

bool is_metal(std::string_view symbol) {
  return is_element_symbol(symbol) &&
         non_metal_symbols().count(std::string(symbol)) == 0;
}

}  // namespace supercon
