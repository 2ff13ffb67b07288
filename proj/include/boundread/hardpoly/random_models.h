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

#ifndef BOUNDREAD_HARDPOLY_RANDOM_MODELS_H_
#define BOUNDREAD_HARDPOLY_RANDOM_MODELS_H_

#include <cstdint>
#include <span>

#include "boundread/core/field.h"
#include "boundread/models/abp.h"
#include "boundread/models/formula.h"

namespace boundread {

// Every generator is a deterministic function of its arguments.

// Uniform full binary tree with n leaves (Remy's algorithm), leaves labelled
// by a shuffled order of x_0..x_{n-1}, gate types by fair coins.
Formula RandomRof(int n, uint64_t seed, const Field& field = Field());

// ROABP reading a random order (the identity order for the second form).
// Middle layers have `width` nodes; each node pair of consecutive layers
// gets a variable edge and/or a constant edge with probability 1/2 each,
// nonzero coefficients. The result is pruned.
Abp RandomRoabp(int n, int width, uint64_t seed, const Field& field = Field());
Abp RandomRoabpInOrder(std::span<const int> order, int n, int width, uint64_t seed,
                       const Field& field = Field());

// Binary interval formula with `size` nodes (rounded down to odd). Product
// children are built on disjoint sub-intervals, sum children on random
// sub-intervals; leaves with no interval left become nonzero constants.
Formula RandomIntervalFormula(int n, int size, uint64_t seed, const Field& field = Field());

// An ascending and a descending one-ordered program glued at s and t, with
// exactly `size` nodes before pruning and at most `size` after. Each layer of the ascending part
// reads from its own range of variables, the ranges increasing with depth;
// the descending part uses decreasing ranges.
Abp RandomStrictIntervalAbp(int n, int size, uint64_t seed, const Field& field = Field());

}  // namespace boundread

#endif  // BOUNDREAD_HARDPOLY_RANDOM_MODELS_H_
