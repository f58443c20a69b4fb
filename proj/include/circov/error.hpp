// Copyright 2026 The circov Authors
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

#ifndef CIRCOV_ERROR_HPP_
#define CIRCOV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace circov {

// Raised when a precondition on caller-supplied data does not hold.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by the brute-force oracles when an instance exceeds the sweep bound.
class OracleRefusal : public std::runtime_error {
 public:
  explicit OracleRefusal(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace circov

#endif  // CIRCOV_ERROR_HPP_
