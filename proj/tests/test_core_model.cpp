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
#include "supercon/decimal.hpp"
#include "supercon/json_io.hpp"
#include "supercon/utf8.hpp"
#include "test_helpers.hpp"

using namespace supercon;
using test::entity_at;
using test::make_document;
using test::make_entity;
using test::make_sentence;

TEST_CASE("utf8 offsets count scalar values, not bytes") {
  std::string text = "Tc ≈ 39 K for δ-doped films";
  CHECK(utf8::length(text) == 27);
  CHECK(utf8::substr(text, 3, 4) == "≈");
  CHECK(utf8::substr(text, 14, 21) == "δ-doped");
  CHECK(utf8::encode(utf8::decode(text)) == text);
}

TEST_CASE("utf8 handles invalid bytes without losing offsets") {
  std::string bad = "a\xFF\xFE b";
  CHECK(utf8::length(bad) == 5);
}

TEST_CASE("decimal arithmetic is exact") {
  auto one = Decimal::parse("1").value();
  auto tenth = Decimal::parse("0.1").value();
  CHECK((one - tenth).to_string() == "0.9");
  CHECK((one - Decimal::parse("0.2").value()).to_string() == "0.8");
  CHECK(Decimal::parse("1.869").value().to_string() == "1.869");
  CHECK(Decimal::parse("0.90").value().to_string() == "0.9");
  CHECK(Decimal::parse("-0.5").value().to_string() == "-0.5");
  CHECK_FALSE(Decimal::parse("x"));
  CHECK_FALSE(Decimal::parse(""));
}

TEST_CASE("label vocabularies are closed") {
  CHECK(to_string(SuperconLabel::clazz) == "class");
  CHECK(to_string(SuperconLabel::tc_value) == "tcValue");
  CHECK(supercon_label_from("me_method") == SuperconLabel::me_method);
  CHECK_FALSE(supercon_label_from("banana"));
  CHECK_FALSE(material_label_from("banana"));
  CHECK(material_label_from("substrate") == MaterialLabel::substrate);
  CHECK(subsection_from("figure_caption") == Subsection::figure_caption);
  CHECK_FALSE(subsection_from("figure caption"));
}

TEST_CASE("validate_document: well-formed single-sentence doc") {
  std::string text = "MgB2 superconducts at 39 K";
  auto doc = make_document(
      "d1", {make_sentence(text, {entity_at(text, "MgB2",
                                            SuperconLabel::material)})});
  CHECK(validate_document(doc).empty());
}

TEST_CASE("validate_document: span past sentence end is named") {
  std::string text = "short";
  Entity bad;
  bad.span = Span{2, 99};
  bad.label = SuperconLabel::material;
  bad.surface = "ort";
  auto doc = make_document("d1", {make_sentence(text, {bad})});
  auto report = validate_document(doc);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("[2,99)") != std::string::npos);
  CHECK(report[0].find("out of bounds") != std::string::npos);
}

TEST_CASE("validate_document: same-label overlap is a violation") {
  std::string text = "LaFeO3 and MgB2";
  auto a = make_entity(text, 0, 6, SuperconLabel::material);
  auto b = make_entity(text, 2, 9, SuperconLabel::material);
  auto doc = make_document("d1", {make_sentence(text, {a, b})});
  auto report = validate_document(doc);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("overlap") != std::string::npos);
}

TEST_CASE("validate_document: attribute on wrong label") {
  std::string text = "MgB2 at 39 K";
  auto entity = make_entity(text, 0, 4, SuperconLabel::material);
  entity.quantity = parse_quantity("39 K");
  auto doc = make_document("d1", {make_sentence(text, {entity})});
  auto report = validate_document(doc);
  REQUIRE(report.size() == 1);
  CHECK(report[0].find("quantity attribute") != std::string::npos);
}

namespace {

AnnotatedDocument random_document(std::mt19937& rng) {
  static const std::vector<std::string> words = {
      "MgB2",  "superconducts", "at",    "39 K",     "and", "FeSe",
      "shows", "resistivity",   "below", "≈12", "kbar"};
  std::uniform_int_distribution<int> sentence_count(1, 4);
  std::uniform_int_distribution<int> word_count(3, 8);
  std::uniform_int_distribution<std::size_t> word_pick(0, words.size() - 1);
  std::uniform_int_distribution<int> label_pick(0, 5);
  std::uniform_int_distribution<int> subsection_pick(0, 5);

  std::vector<Sentence> sentences;
  int n_sentences = sentence_count(rng);
  for (int s = 0; s < n_sentences; ++s) {
    std::string text;
    for (int w = 0; w < word_count(rng); ++w) {
      if (w) text += ' ';
      text += words[word_pick(rng)];
    }
    Sentence sentence = make_sentence(text);
    sentence.subsection = kAllSubsections[subsection_pick(rng)];
    auto length = static_cast<std::int32_t>(utf8::length(text));
    // a few non-overlapping entities
    std::int32_t cursor = 0;
    while (cursor + 2 < length && sentence.entities.size() < 3) {
      std::uniform_int_distribution<std::int32_t> start_pick(cursor,
                                                             length - 2);
      std::int32_t start = start_pick(rng);
      std::uniform_int_distribution<std::int32_t> end_pick(start + 1, length);
      std::int32_t end = end_pick(rng);
      sentence.entities.push_back(make_entity(
          text, start, end,
          kAllSuperconLabels[static_cast<std::size_t>(label_pick(rng))]));
      cursor = end + 1;
    }
    sentences.push_back(std::move(sentence));
  }
  auto doc = make_document("doc-rng", std::move(sentences));
  doc.biblio.title = "A random title";
  doc.biblio.year = "2021";
  return doc;
}

}  // namespace

TEST_CASE("canonical JSON round-trip is the identity") {
  std::mt19937 rng(20260811);
  for (int i = 0; i < 50; ++i) {
    AnnotatedDocument doc = random_document(rng);
    auto restored = io::document_from_json(io::to_json(doc));
    CHECK(restored == doc);
  }
}

TEST_CASE("round-trip covers quantity, material, decision, link payloads") {
  std::string text = "2% Zn-doped MgB2 single crystal has Tc = 39 K";
  Entity material = entity_at(text, "2% Zn-doped MgB2 single crystal",
                              SuperconLabel::material);
  material.material = analyze_material(material.surface,
                                       NameLookup::parse("hydrogen\tH\n"),
                                       TaxonomyRules::parse("oxide\tO\n"));
  Entity tc_value = entity_at(text, "39 K", SuperconLabel::tc_value);
  tc_value.quantity = parse_quantity("39 K");
  tc_value.tc_decision =
      TcDecision::make(TcReason::linked_tc_expression, "Tc =");
  Sentence sentence = make_sentence(text, {material, tc_value});
  Link link;
  link.type = LinkType::material_tc_value;
  link.source = material;
  link.target = tc_value;
  link.method = LinkMethod::pair_rule;
  sentence.links.push_back(link);
  auto doc = make_document("d-full", {sentence});

  auto restored = io::document_from_json(io::to_json(doc));
  CHECK(restored == doc);
}

TEST_CASE("deserializing unknown tags is an error, not a drop") {
  auto doc_json = io::to_json(make_document(
      "d1", {make_sentence("MgB2",
                           {make_entity("MgB2", 0, 4,
                                        SuperconLabel::material)})}));
  doc_json["sentences"][0]["entities"][0]["label"] = "mystery";
  CHECK_THROWS_WITH_AS(io::document_from_json(doc_json),
                       doctest::Contains("unknown entity label"),
                       std::runtime_error);

  auto with_bad_subsection = doc_json;
  with_bad_subsection["sentences"][0]["entities"][0]["label"] = "material";
  with_bad_subsection["sentences"][0]["subsection"] = "appendix";
  CHECK_THROWS_AS(io::document_from_json(with_bad_subsection),
                  std::runtime_error);
}

TEST_CASE("digest is a stable sha-256 hex over raw bytes") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
