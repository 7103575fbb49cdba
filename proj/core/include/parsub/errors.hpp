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

#ifndef PARSUB_ERRORS_HPP_
#define PARSUB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace parsub {

// Malformed or inconsistent input (unknown ids, bad dimensions, invalid
// graphs). The message names the offending field or invariant.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed its configured cap. Results are
// never silently truncated.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A ratio whose denominator (the optimum) is zero.
class UndefinedRatioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parsub

#endif  // PARSUB_ERRORS_HPP_
