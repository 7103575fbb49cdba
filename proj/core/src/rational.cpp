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

#include "parsub/rational.hpp"

#include <charconv>
#include <system_error>

#include "parsub/errors.hpp"

namespace parsub {
namespace {

std::int64_t ParseInteger(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw InputError("invalid rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string ToString(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, text));
  }
  const std::int64_t num = ParseInteger(text.substr(0, slash), text);
  const std::int64_t den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    throw InputError("invalid rational '" + std::string(text) +
                     "': zero denominator");
  }
  return Rational(num, den);
}

double ToDouble(const Rational& value) {
  return boost::rational_cast<double>(value);
}

}  // namespace parsub
