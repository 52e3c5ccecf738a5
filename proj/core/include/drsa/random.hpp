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

#ifndef DRSA_RANDOM_HPP_
#define DRSA_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace drsa {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent child seeds so that each
// consumer of randomness in a trial gets its own stream.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Child streams used by scenario generation.
enum class SeedStream : std::uint64_t { kWorld = 0, kProfile = 1, kBeliefs = 2 };

constexpr std::uint64_t mix_seed(std::uint64_t base, SeedStream stream) {
  return mix_seed(base, static_cast<std::uint64_t>(stream));
}

}  // namespace drsa

#endif  // DRSA_RANDOM_HPP_
