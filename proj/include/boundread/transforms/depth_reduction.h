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

#ifndef BOUNDREAD_TRANSFORMS_DEPTH_REDUCTION_H_
#define BOUNDREAD_TRANSFORMS_DEPTH_REDUCTION_H_

#include <cstddef>
#include <vector>

#include "boundread/models/formula.h"

namespace boundread {

// Heavy-child walk on a binary formula: starting at the root, step into the
// larger child while 3*size > 2*s. The returned path (child indices from the
// root) names a gate whose subtree size lies in [s/3, 2s/3].
// kInvalidArgument if s < 3 or the formula is not binary.
std::vector<size_t> FindTreeSeparator(const Formula& binary);

// F = (prod left)(prod right) g + F|_{g=0}. `left` and `right` are the
// product siblings met on the root-to-g path, split by whether their
// variables lie before or after span(g); siblings without variables, and all
// siblings when g reads no variable, go left. Sum siblings only feed `rest`.
struct SeparatorDecomposition {
  std::vector<size_t> path;
  Gate g;
  std::vector<Gate> left;
  std::vector<Gate> right;
  Formula rest;  // simplified
};
SeparatorDecomposition DecomposeAtSeparator(const Formula& binary,
                                            const std::vector<size_t>& path);

// Balanced interval formula for the same polynomial, by recursing on the
// four parts above. Depth grows by two per level and each part has at most
// 2s/3 nodes. kInvalidModel on a non-interval input.
Formula DepthReduceInterval(const Formula& formula);

}  // namespace boundread

#endif  // BOUNDREAD_TRANSFORMS_DEPTH_REDUCTION_H_
