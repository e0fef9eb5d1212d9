// Copyright 2026 The bvrelax Authors
//
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

#include "bvrelax/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bvrelax {
namespace {

using boost::multiprecision::cpp_int;

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

cpp_int parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed rational literal: " +
                                std::string(s));
  }
  if (s[0] == '+') s.remove_prefix(1);
  return cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_integer(text.substr(0, slash));
    cpp_int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) {
      whole = "0";
    }
    if (frac.empty()) throw std::invalid_argument("malformed decimal");
    cpp_int w = parse_integer(whole);
    cpp_int f = parse_integer(frac);
    if (frac[0] == '-' || frac[0] == '+') {
      throw std::invalid_argument("malformed decimal");
    }
    cpp_int scale = pow(cpp_int(10), static_cast<unsigned>(frac.size()));
    Rational mag = Rational(abs(w)) + Rational(f, scale);
    return negative ? Rational(-mag) : mag;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
  auto num = numerator(q);
  auto den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp >= 0) {
    r *= Rational(pow(cpp_int(2), static_cast<unsigned>(exp)));
  } else {
    r /= Rational(pow(cpp_int(2), static_cast<unsigned>(-exp)));
  }
  return r;
}

Rational dyadic(int k) {
  if (k >= 0) return Rational(cpp_int(1), pow(cpp_int(2), static_cast<unsigned>(k)));
  return Rational(pow(cpp_int(2), static_cast<unsigned>(-k)));
}

}  // namespace bvrelax
