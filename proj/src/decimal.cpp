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

#include "supercon/decimal.hpp"

#include <cmath>
#include <cstdlib>

namespace supercon {

namespace {

std::int64_t pow10(int n) {
  std::int64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::int64_t units = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      if (units > (INT64_MAX - 9) / 10) return std::nullopt;
      units = units * 10 + (c - '0');
      if (seen_point) ++scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      return std::nullopt;
    }
  }
  if (!any_digit || scale > 15) return std::nullopt;
  return Decimal{negative ? -units : units, scale}.normalized();
}

Decimal Decimal::normalized() const {
  Decimal d = *this;
  while (d.scale > 0 && d.units % 10 == 0) {
    d.units /= 10;
    --d.scale;
  }
  return d;
}

Decimal Decimal::operator+(const Decimal& other) const {
  int s = scale > other.scale ? scale : other.scale;
  std::int64_t a = units * pow10(s - scale);
  std::int64_t b = other.units * pow10(s - other.scale);
  return Decimal{a + b, s}.normalized();
}

Decimal Decimal::operator-(const Decimal& other) const {
  return *this + Decimal{-other.units, other.scale};
}

bool Decimal::operator==(const Decimal& other) const {
  Decimal a = normalized();
  Decimal b = other.normalized();
  return a.units == b.units && a.scale == b.scale;
}

double Decimal::to_double() const {
  return static_cast<double>(units) / static_cast<double>(pow10(scale));
}

std::string Decimal::to_string() const {
  Decimal d = normalized();
  std::string digits = std::to_string(d.units < 0 ? -d.units : d.units);
  while (static_cast<int>(digits.size()) <= d.scale)
    digits.insert(digits.begin(), '0');
  std::string out;
  if (d.units < 0) out += '-';
  out += digits.substr(0, digits.size() - d.scale);
  if (d.scale > 0) {
    out += '.';
    out += digits.substr(digits.size() - d.scale);
  }
  return out;
}

}  // namespace supercon
