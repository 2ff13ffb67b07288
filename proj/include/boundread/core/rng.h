// Copyright 2026 The boundread Authors.
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

#ifndef BOUNDREAD_CORE_RNG_H_
#define BOUNDREAD_CORE_RNG_H_

#include <cstdint>
#include <span>
#include <utility>

#include "boundread/core/field.h"

namespace boundread {

// SplitMix64. Every sampler in the project draws from this generator only, and
// the bounded/shuffle helpers below are part of the reproducibility contract:
//
//   Next():       state += 0x9e3779b97f4a7c15; z = state;
//                 z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//                 z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//                 return z ^ (z >> 31);
//   Uniform(b):   threshold = (2^64 - b) mod b; draw r = Next() until
//                 r >= threshold; return r mod b.
//   Shuffle(v):   for i = |v|-1 down to 1: swap(v[i], v[Uniform(i + 1)]).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next();
  // Uniform in [0, bound); bound must be positive.
  uint64_t Uniform(uint64_t bound);
  bool Coin() { return (Next() >> 63) != 0; }
  uint64_t FieldValue(const Field& field) { return Uniform(field.modulus()); }
  uint64_t NonZeroFieldValue(const Field& field) {
    return 1 + Uniform(field.modulus() - 1);
  }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(Uniform(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  uint64_t state_;
};

// Per-trial seed: seed XOR index, so results never depend on scheduling.
inline uint64_t DeriveSeed(uint64_t seed, uint64_t index) { return seed ^ index; }

}  // namespace boundread

#endif  // BOUNDREAD_CORE_RNG_H_
