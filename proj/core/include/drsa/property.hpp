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

#ifndef DRSA_PROPERTY_HPP_
#define DRSA_PROPERTY_HPP_

#include <compare>
#include <cstddef>

namespace drsa {

// Index of a property within its PropertySpace.
struct PropertyId {
  std::size_t value = 0;

  friend auto operator<=>(PropertyId, PropertyId) = default;
};

// Index into a property's ordered value domain.
using ValueIndex = int;

}  // namespace drsa

#endif  // DRSA_PROPERTY_HPP_
