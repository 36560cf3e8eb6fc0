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
#include <random>
#include <set>

#include "doctest.h"
#include "linker_oracle.hpp"
#include "supercon/default_data.hpp"
#include "supercon/linker.hpp"
#include "supercon/utf8.hpp"
#include "test_helpers.hpp"

using namespace supercon;
using test::entity_at;
using test::make_sentence;
using test::span_of;

namespace {

const std::string kWorkedExample =
    "We tested two materials MgB2 (Tc = 39 K) and FeSe (Tc = 16 K).";

}  // namespace

TEST_CASE("the shipped penalty set matches the built-in default") {
  PenaltyTerms from_file = PenaltyTerms::parse(supercon::data::kPenaltyTerms);
  PenaltyTerms built_in = PenaltyTerms::defaults();
  CHECK(std::set<char32_t>(from_file.punctuation.begin(),
                           from_file.punctuation.end()) ==
        std::set<char32_t>(built_in.punctuation.begin(),
                           built_in.punctuation.end()));
  CHECK(std::set<std::u32string>(from_file.words.begin(),
                                 from_file.words.end()) ==
        std::set<std::u32string>(built_in.words.begin(),
                                 built_in.words.end()));
  // exactly the documented set
  CHECK(built_in.punctuation.size() == 3);
  CHECK(built_in.words.size() == 6);
}

TEST_CASE("worked example: centroids and raw distances") {
  Span mgb2 = span_of(kWorkedExample, "MgB2");
  Span fese = span_of(kWorkedExample, "FeSe");
  Span tc39 = span_of(kWorkedExample, "39 K");

  CHECK(centroid(tc39) == 38);
  CHECK(centroid(mgb2) == 27);
  CHECK(centroid(fese) == 48);
  CHECK(raw_distance(tc39, fese) == 10);
  CHECK(raw_distance(tc39, mgb2) == 11);
}

TEST_CASE("worked example: parenthesis expansion shifts 38 to 35") {
  std::u32string text = utf8::decode(kWorkedExample);
  Span tc39 = span_of(kWorkedExample, "39 K");
  Span expanded = expanded_span(text, tc39);
  CHECK(expanded == span_of(kWorkedExample, "(Tc = 39 K)"));
  CHECK(centroid(expanded) == 35);

  Span mgb2 = span_of(kWorkedExample, "MgB2");
  CHECK(expanded_span(text, mgb2) == mgb2);  // not inside parens
  CHECK(raw_distance(expanded, mgb2) == 8);
}

TEST_CASE("nested parentheses expand to the innermost enclosing pair") {
  std::string text = "MgB2 (known (Tc = 39 K) sample) here";
  std::u32string decoded = utf8::decode(text);
  Span tc39 = span_of(text, "39 K");
  CHECK(expanded_span(decoded, tc39) == span_of(text, "(Tc = 39 K)"));
  // an entity spanning the inner pair expands to the outer one
  Span inner = span_of(text, "(Tc = 39 K)");
  CHECK(expanded_span(decoded, inner) ==
        span_of(text, "(known (Tc = 39 K) sample)"));
  // unbalanced parens never expand
  std::u32string unbalanced = utf8::decode("broken ( MgB2 39 K");
  Span value{14, 18};
  CHECK(expanded_span(unbalanced, value) == value);
}

TEST_CASE("worked example: adjusted distances 8 and 20") {
  std::u32string text = utf8::decode(kWorkedExample);
  PenaltyTerms penalties = PenaltyTerms::defaults();
  Span mgb2 = span_of(kWorkedExample, "MgB2");
  Span fese = span_of(kWorkedExample, "FeSe");
  Span tc39 = span_of(kWorkedExample, "39 K");

  CHECK(adjusted_distance(text, mgb2, tc39, penalties) == 8);
  // "and" lies between FeSe and 39 K, doubling the distance.
  CHECK(penalty_between(text, expanded_span(text, tc39), fese, penalties));
  CHECK(adjusted_distance(text, fese, tc39, penalties) == 20);
}

TEST_CASE("worked example: each temperature links to its material") {
  std::vector<Entity> sources = {
      entity_at(kWorkedExample, "MgB2", SuperconLabel::material),
      entity_at(kWorkedExample, "FeSe", SuperconLabel::material)};
  std::vector<Entity> targets = {
      entity_at(kWorkedExample, "39 K", SuperconLabel::tc_value),
      entity_at(kWorkedExample, "16 K", SuperconLabel::tc_value)};
  auto links = distance_link(kWorkedExample, LinkType::material_tc_value,
                             sources, targets, PenaltyTerms::defaults());
  REQUIRE(links.size() == 2);
  CHECK(links[0].source.surface == "MgB2");
  CHECK(links[0].target.surface == "39 K");
  CHECK(links[0].distance == 8);
  CHECK(links[1].source.surface == "FeSe");
  CHECK(links[1].target.surface == "16 K");
  CHECK(links[1].method == LinkMethod::distance_linking);
}

TEST_CASE("penalty doubles the distance once, not per token") {
  // two penalty words and a comma between the pair
  std::string text = "AAAA and but, also 11 K";
  std::u32string decoded = utf8::decode(text);
  Span source = span_of(text, "AAAA");
  Span target = span_of(text, "11 K");
  std::int64_t raw = raw_distance(source, target);
  CHECK(adjusted_distance(decoded, source, target,
                          PenaltyTerms::defaults()) == 2 * raw);
}

TEST_CASE("order-linking: the respectively sentence") {
  std::string text =
      "P-or Ba-122 and Co-doped Ba-122 have lower Tc's of about 30 K and "
      "24 K, respectively, which makes helium free operation questionable.";
  CHECK(contains_respectively(text));

  Sentence sentence = make_sentence(
      text, {entity_at(text, "P-or Ba-122", SuperconLabel::material),
             entity_at(text, "Co-doped Ba-122", SuperconLabel::material),
             entity_at(text, "30 K", SuperconLabel::tc_value),
             entity_at(text, "24 K", SuperconLabel::tc_value)});
  auto links = link_sentence(sentence, LinkType::material_tc_value,
                             PenaltyTerms::defaults());
  REQUIRE(links.size() == 2);
  CHECK(links[0].method == LinkMethod::order_linking);
  CHECK(links[0].source.surface == "P-or Ba-122");
  CHECK(links[0].target.surface == "30 K");
  CHECK(links[1].source.surface == "Co-doped Ba-122");
  CHECK(links[1].target.surface == "24 K");
}

TEST_CASE("order-linking: extras stay unlinked") {
  std::string text = "A1 B2 C3 see 10 K and 20 K, respectively.";
  std::vector<Entity> sources = {
      entity_at(text, "A1", SuperconLabel::material),
      entity_at(text, "B2", SuperconLabel::material),
      entity_at(text, "C3", SuperconLabel::material)};
  std::vector<Entity> targets = {
      entity_at(text, "10 K", SuperconLabel::tc_value),
      entity_at(text, "20 K", SuperconLabel::tc_value)};
  auto links = order_link(LinkType::material_tc_value, sources, targets);
  REQUIRE(links.size() == 2);
  CHECK(links[0].source.surface == "A1");
  CHECK(links[1].source.surface == "B2");
}

TEST_CASE("pair rule: a single source-target pair links automatically") {
  std::string text = "NbN shows an onset near 16 K in films.";
  Sentence sentence = make_sentence(
      text, {entity_at(text, "NbN", SuperconLabel::material),
             entity_at(text, "16 K", SuperconLabel::tc_value)});
  auto links = link_sentence(sentence, LinkType::material_tc_value,
                             PenaltyTerms::defaults());
  REQUIRE(links.size() == 1);
  CHECK(links[0].method == LinkMethod::pair_rule);
  CHECK_FALSE(links[0].distance.has_value());
}

TEST_CASE("rejected tc values never participate") {
  std::string text = "NbN was annealed at 600 K.";
  Entity tc_value = entity_at(text, "600 K", SuperconLabel::tc_value);
  tc_value.tc_decision =
      TcDecision::make(TcReason::rejected_non_tc_keyword, "annealed");
  Sentence sentence = make_sentence(
      text, {entity_at(text, "NbN", SuperconLabel::material), tc_value});
  CHECK(link_sentence(sentence, LinkType::material_tc_value,
                      PenaltyTerms::defaults())
            .empty());
}

TEST_CASE("single source: every target links to it regardless of distance") {
  std::string text = "MgB2 shows 39 K here, and 12 K there, and 7 K too.";
  std::vector<Entity> sources = {
      entity_at(text, "MgB2", SuperconLabel::material)};
  std::vector<Entity> targets = {
      entity_at(text, "39 K", SuperconLabel::tc_value),
      entity_at(text, "12 K", SuperconLabel::tc_value),
      entity_at(text, "7 K", SuperconLabel::tc_value)};
  auto links = distance_link(text, LinkType::material_tc_value, sources,
                             targets, PenaltyTerms::defaults());
  REQUIRE(links.size() == 3);
  for (const Link& link : links) CHECK(link.source.surface == "MgB2");
}

TEST_CASE("me_method-tcValue uses the same machinery") {
  std::string text = "resistivity gave 39 K while susceptibility gave 30 K.";
  Sentence sentence = make_sentence(
      text, {entity_at(text, "resistivity", SuperconLabel::me_method),
             entity_at(text, "susceptibility", SuperconLabel::me_method),
             entity_at(text, "39 K", SuperconLabel::tc_value),
             entity_at(text, "30 K", SuperconLabel::tc_value)});
  auto links = link_sentence(sentence, LinkType::me_method_tc_value,
                             PenaltyTerms::defaults());
  REQUIRE(links.size() == 2);
  CHECK(links[0].source.surface == "resistivity");
  CHECK(links[0].target.surface == "39 K");
  CHECK(links[1].source.surface == "susceptibility");
  CHECK(links[1].target.surface == "30 K");
}

// ---------------------------------------------------------------------------
// Randomized equivalence against the independent brute-force oracle.

using test_oracle::BuiltSentence;
using test_oracle::build_random_sentence;
using test_oracle::OraclePick;
using test_oracle::oracle_best_source;

TEST_CASE("property: distance_link equals the brute-force oracle") {
  std::mt19937 rng(20260501);
  PenaltyTerms penalties = PenaltyTerms::defaults();
  for (int round = 0; round < 500; ++round) {
    BuiltSentence built = build_random_sentence(rng);
    auto links = distance_link(built.text, LinkType::material_tc_value,
                               built.sources, built.targets, penalties);
    REQUIRE(links.size() == built.targets.size());
    for (std::size_t t = 0; t < built.targets.size(); ++t) {
      OraclePick expected =
          oracle_best_source(built, built.targets[t].span);
      INFO("sentence: ", built.text);
      CHECK(links[t].source.span.start == expected.source_start);
      CHECK(links[t].distance == expected.distance);
    }
  }
}

TEST_CASE("property: without parentheses, expansion is the identity") {
  std::mt19937 rng(999);
  for (int round = 0; round < 200; ++round) {
    BuiltSentence built = build_random_sentence(rng);
    std::string stripped;
    std::vector<std::int32_t> shift(built.text.size() + 1, 0);
    int removed = 0;
    for (std::size_t i = 0; i < built.text.size(); ++i) {
      shift[i] = removed;
      if (built.text[i] == '(' || built.text[i] == ')') {
        ++removed;
        continue;
      }
      stripped += built.text[i];
    }
    std::u32string decoded = utf8::decode(stripped);
    for (const Entity& entity : built.sources) {
      Span moved{entity.span.start - shift[entity.span.start],
                 entity.span.end - shift[entity.span.end - 1] };
      CHECK(expanded_span(decoded, moved) == moved);
      CHECK(centroid(expanded_span(decoded, moved)) == centroid(moved));
    }
  }
}
