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

#ifndef BVRELAX_RATIONAL_HPP_
#define BVRELAX_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bvrelax {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers, and finite decimals such as "0.125".
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Exact binary expansion of a finite double.
Rational from_double(double x);

// 2^-k.
Rational dyadic(int k);

}  // namespace bvrelax

#endif  // BVRELAX_RATIONAL_HPP_
