// Copyright 2026 The parsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARSUB_RATIONAL_HPP_
#define PARSUB_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Under C++20 rewritten comparisons, Boost 1.74 resolves rational == int to
// its own reversed template and recurses forever. Exact-match overloads for
// the integer types the library compares against keep resolution away from it.
#define PARSUB_RATIONAL_EQ(IntArg)                                              \
  inline bool operator==(const rational<std::int64_t>& a, IntArg b) {           \
    return a.numerator() == b && a.denominator() == 1;                          \
  }                                                                             \
  inline bool operator==(IntArg b, const rational<std::int64_t>& a) { return a == b; }
PARSUB_RATIONAL_EQ(int)
PARSUB_RATIONAL_EQ(long)
PARSUB_RATIONAL_EQ(long long)
#undef PARSUB_RATIONAL_EQ

}  // namespace boost

namespace parsub {

// Every objective value, ratio and bound in the library is an exact rational.
using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms; integers print without a denominator.
std::string ToString(const Rational& value);

// Accepts "p/q", "p" or "-p". Throws InputError on malformed text or a zero
// denominator.
Rational ParseRational(std::string_view text);

// Nearest double, for plot export only.
double ToDouble(const Rational& value);

}  // namespace parsub

#endif  // PARSUB_RATIONAL_HPP_
