/*
   Copyright 2026 The toromon authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TOROMON_NUMERIC_HPP
#define TOROMON_NUMERIC_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toromon {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor of the n-th root of a >= 0, n >= 1.
Int iroot_floor(const Int& a, unsigned n);

// Exact n-th root of a >= 0 if one exists.
std::optional<Int> iroot_exact(const Int& a, unsigned n);

// Exact n-th root of a rational, complete over Q (sign-aware).
std::optional<Rat> rational_nth_root(const Rat& a, unsigned n);

// All divisors of |a| > 0, both signs, by trial division.
std::vector<Int> signed_divisors(const Int& a);

// "7", "-3/4"; denominator omitted when 1.
std::string rat_to_string(const Rat& q);

// Inverse of rat_to_string; throws Error(ParseError) on malformed input.
Rat rat_from_string(const std::string& text);

}  // namespace toromon

#endif
