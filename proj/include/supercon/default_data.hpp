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

// Built-in copies of the files under data/, embedded at configure time
// so the binaries run without a data directory.
namespace supercon::data {

extern const char* const kLexicon;       // data/lexicon.tsv
extern const char* const kNameLookup;    // data/name_formula.tsv
extern const char* const kTaxonomy;      // data/taxonomy.rules
extern const char* const kTcTerms;       // data/tc_terms.tsv
extern const char* const kPenaltyTerms;  // data/penalty_terms.txt

}  // namespace supercon::data
