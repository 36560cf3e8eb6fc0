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
#include "supercon/quantity.hpp"
#include "supercon/utf8.hpp"

using namespace supercon;

TEST_CASE("plain temperature") {
  Quantity q = parse_quantity("39 K");
  CHECK(q.kind == QuantityKind::temperature);
  CHECK(q.qualifier == Qualifier::none);
  CHECK(q.value == 39.0);
  CHECK(q.unit == "K");
  CHECK(q.normalized == 39.0);
  CHECK_FALSE(q.is_interval());
}

TEST_CASE("'above 100K' keeps its bound direction") {
  Quantity q = parse_quantity("above 100K");
  CHECK(q.kind == QuantityKind::temperature);
  CHECK(q.qualifier == Qualifier::greater);
  CHECK(q.value == 100.0);
  CHECK(q.normalized == 100.0);
}

TEST_CASE("pressure units normalize to GPa") {
  Quantity q = parse_quantity("20 kbar");
  CHECK(q.kind == QuantityKind::pressure);
  CHECK(q.normalized == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(parse_quantity("1.5 GPa").normalized == 1.5);
  CHECK(parse_quantity("300 MPa").normalized ==
        doctest::Approx(0.3).epsilon(1e-12));
  CHECK(parse_quantity("2 bar").normalized ==
        doctest::Approx(2e-4).epsilon(1e-12));
  CHECK(parse_quantity("5 Pa").normalized ==
        doctest::Approx(5e-9).epsilon(1e-12));
}

TEST_CASE("millikelvin") {
  Quantity q = parse_quantity("30 mK");
  CHECK(q.kind == QuantityKind::temperature);
  CHECK(q.normalized == doctest::Approx(0.030).epsilon(1e-12));
}

TEST_CASE("unit consistency: 1 GPa equals 10 kbar") {
  CHECK(parse_quantity("1 GPa").normalized ==
        parse_quantity("10 kbar").normalized);
}

TEST_CASE("celsius conversion adds exactly 273.15") {
  CHECK(parse_quantity("0 °C").normalized == 273.15);
  // definitional identity, bit-for-bit
  CHECK(parse_quantity("-73.15 °C").normalized == -73.15 + 273.15);
  CHECK(parse_quantity("-300 °C").normalized == -300.0 + 273.15);
}

TEST_CASE("qualifiers") {
  CHECK(parse_quantity("below 4 K").qualifier == Qualifier::less);
  CHECK(parse_quantity("~39 K").qualifier == Qualifier::approx);
  CHECK(parse_quantity("≈39 K").qualifier == Qualifier::approx);
  CHECK(parse_quantity("about 39 K").qualifier == Qualifier::approx);
  CHECK(parse_quantity("> 90 K").qualifier == Qualifier::greater);
}

TEST_CASE("ranges parse to intervals with midpoint") {
  Quantity q = parse_quantity("30–35 K");
  REQUIRE(q.is_interval());
  CHECK(q.value == 30.0);
  CHECK(q.value_high == 35.0);
  CHECK(q.normalized_midpoint() == 32.5);
  Quantity ascii = parse_quantity("30-35 K");
  CHECK(ascii.value == 30.0);
  CHECK(ascii.value_high == 35.0);
  Quantity worded = parse_quantity("30 to 35 K");
  CHECK(worded.value_high == 35.0);
}

TEST_CASE("parse is total over the documented unit set, errors elsewhere") {
  for (const char* good :
       {"1 K", "1 mK", "1 °C", "1 GPa", "1 MPa", "1 kbar", "1 bar",
        "1 Pa"})
    CHECK_NOTHROW(parse_quantity(good));
  CHECK_THROWS_AS(parse_quantity("39 killowatts"), QuantityParseError);
  CHECK_THROWS_AS(parse_quantity("12 T"), QuantityParseError);
  CHECK_THROWS_AS(parse_quantity("7 meV"), QuantityParseError);
  CHECK_THROWS_AS(parse_quantity("fast"), QuantityParseError);
  CHECK_THROWS_AS(parse_quantity(""), QuantityParseError);
  CHECK_THROWS_AS(parse_quantity("K"), QuantityParseError);
}

TEST_CASE("negative kelvin is a parse error, negative celsius is not") {
  CHECK_THROWS_AS(parse_quantity("-5 K"), QuantityParseError);
  CHECK_THROWS_AS(parse_quantity("-1 mK"), QuantityParseError);
  CHECK_NOTHROW(parse_quantity("-5 °C"));
}

TEST_CASE("try_parse returns nullopt instead of throwing") {
  CHECK_FALSE(try_parse_quantity("no numbers here"));
  CHECK(try_parse_quantity("39 K"));
}

TEST_CASE("scan finds quantities with spans in running text") {
  std::u32string text =
      utf8::decode("MgB2 (Tc = 39 K) and FeSe under 2 GPa, above 100K");
  auto matches = scan_quantities(text);
  REQUIRE(matches.size() == 3);
  CHECK(matches[0].span == Span{11, 15});
  CHECK(matches[0].quantity.kind == QuantityKind::temperature);
  CHECK(matches[1].quantity.kind == QuantityKind::pressure);
  CHECK(matches[1].quantity.normalized == 2.0);
  CHECK(matches[2].quantity.qualifier == Qualifier::greater);
  CHECK(utf8::encode(text.substr(matches[2].span.start,
                                 matches[2].span.length())) == "above 100K");
}

TEST_CASE("scan does not fire inside identifiers") {
  auto matches = scan_quantities(utf8::decode("sample Ba-122 and H3S"));
  CHECK(matches.empty());
}
