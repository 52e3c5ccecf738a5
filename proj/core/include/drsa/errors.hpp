// Copyright 2026 The drsa Authors
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

#ifndef DRSA_ERRORS_HPP_
#define DRSA_ERRORS_HPP_

#include <stdexcept>

namespace drsa {

// Bad configuration or inconsistent inputs. The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable or unwritable files. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds what exhaustive search is allowed to attempt.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace drsa

#endif  // DRSA_ERRORS_HPP_
