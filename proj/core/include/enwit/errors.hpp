// Copyright 2026 The enwit Authors
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

#ifndef ENWIT_ERRORS_HPP_
#define ENWIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace enwit {

// Bad inputs: shape mismatches, invalid parameters, malformed text.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what)
      : std::invalid_argument(what) {}
};

// A numerical routine failed to meet its contract (eigen solver did not
// converge, SDP duality gap above tolerance, probabilities do not sum to 1).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace enwit

#endif  // ENWIT_ERRORS_HPP_
