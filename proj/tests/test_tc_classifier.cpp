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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "supercon/default_data.hpp"
#include "supercon/tc_classifier.hpp"
#include "test_helpers.hpp"

using namespace supercon;
using test::entity_at;
using test::make_sentence;

namespace {

const TcTermList& terms() {
  static const TcTermList list = TcTermList::parse(data::kTcTerms);
  return list;
}

TcDecision decide(const std::string& text, const std::string& value,
                  std::vector<Entity> extra = {}) {
  Entity candidate = entity_at(text, value, SuperconLabel::tc_value);
  std::vector<Entity> entities = std::move(extra);
  entities.push_back(candidate);
  Sentence sentence = make_sentence(text, std::move(entities));
  return classify_tc(candidate, sentence, terms());
}

}  // namespace

TEST_CASE("accepted: tc expression entity in the sentence") {
  std::string text = "MgB2 superconducts at 39 K";
  TcDecision d = decide(text, "39 K",
                        {entity_at(text, "superconducts at",
                                   SuperconLabel::tc)});
  CHECK(d.accepted);
  CHECK(d.reason == TcReason::linked_tc_expression);
}

TEST_CASE("accepted: standard term without a tagged tc expression") {
  TcDecision d = decide("the critical temperature reaches 39 K", "39 K");
  CHECK(d.accepted);
  CHECK(d.reason == TcReason::standard_term);
}

TEST_CASE("rejected: annealing temperature") {
  TcDecision d = decide("the sample was annealed at 400 K", "400 K");
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == TcReason::rejected_non_tc_keyword);
  CHECK(d.evidence == "annealed");
}

TEST_CASE("rejected: Curie temperature") {
  TcDecision d = decide("the Curie point lies near 630 K", "630 K");
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == TcReason::rejected_non_tc_keyword);
}

TEST_CASE("rejected: transition width") {
  TcDecision d = decide("ΔTc = 2 K was observed", "2 K");
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == TcReason::rejected_width);
}

TEST_CASE("rejected: negated superconductivity") {
  TcDecision d = decide("at 70 K there is no superconductivity", "70 K");
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == TcReason::rejected_negation);
}

TEST_CASE("rejected: relative comparison") {
  TcDecision d = decide("1 K higher than material X", "1 K");
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == TcReason::rejected_relative);
}

TEST_CASE("rejected: nothing speaks for a Tc") {
  TcDecision d = decide("the chamber was held at 300 K overnight", "300 K");
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == TcReason::no_evidence);
}

TEST_CASE("nearest evidence wins within one sentence") {
  // The annealing keyword is adjacent to 400 K, the tc expression to 39 K.
  std::string text = "annealed at 400 K, MgB2 superconducts at 39 K";
  Entity tc = entity_at(text, "superconducts at", SuperconLabel::tc);

  TcDecision hot = decide(text, "400 K", {tc});
  CHECK_FALSE(hot.accepted);
  TcDecision cold = decide(text, "39 K", {tc});
  CHECK(cold.accepted);
  CHECK(cold.reason == TcReason::linked_tc_expression);
}

TEST_CASE("rejection wins a distance tie") {
  // "not superconducting" and "superconducting" both end right before
  // the candidate; the rejection must win.
  std::string text = "not superconducting above 2 K";
  TcDecision d = decide(text, "above 2 K");
  CHECK_FALSE(d.accepted);
  CHECK(d.reason == TcReason::rejected_negation);
}

TEST_CASE("acceptance terms outside the window are ignored") {
  std::string text =
      "superconductivity was discussed, and the furnace stayed at 900 K";
  Entity candidate = entity_at(text, "900 K", SuperconLabel::tc_value);
  Sentence sentence = make_sentence(text, {candidate});
  TcDecision wide = classify_tc(candidate, sentence, terms(), -1);
  CHECK(wide.accepted);  // whole sentence window: the accept term counts
  TcDecision narrow = classify_tc(candidate, sentence, terms(), 10);
  CHECK_FALSE(narrow.accepted);
  CHECK(narrow.reason == TcReason::no_evidence);
}

TEST_CASE("decision invariant: accepted iff acceptance reason") {
  for (TcReason reason :
       {TcReason::linked_tc_expression, TcReason::standard_term,
        TcReason::rejected_non_tc_keyword, TcReason::rejected_relative,
        TcReason::rejected_width, TcReason::rejected_negation,
        TcReason::no_evidence}) {
    TcDecision d = TcDecision::make(reason);
    CHECK(d.accepted == (reason == TcReason::linked_tc_expression ||
                         reason == TcReason::standard_term));
  }
}

TEST_CASE("unknown category in a term file is rejected") {
  CHECK_THROWS_AS(TcTermList::parse("foo\tmaybe\n"), std::runtime_error);
}
