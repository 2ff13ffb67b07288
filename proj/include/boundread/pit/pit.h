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

#ifndef BOUNDREAD_PIT_PIT_H_
#define BOUNDREAD_PIT_PIT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boundread/core/multilinear.h"
#include "boundread/models/abp.h"

namespace boundread {

struct PitResult {
  bool zero = true;
  // Set when !zero. The monomial is inclusion-minimal among those with a
  // nonzero coefficient, so the 0/1 indicator point of the monomial
  // evaluates to exactly that coefficient.
  VarMask witness_mask = 0;
  uint64_t witness_coeff = 0;
  std::vector<uint64_t> witness_point;
  // Largest spanning set kept during the first sweep.
  size_t max_basis = 0;
};

// Deterministic white-box test for read-once oblivious programs. Sweeps the
// layers keeping at most width(layer) monomial-labelled coefficient rows that
// span the coefficient matrix of the node polynomials. kNotRoabp otherwise.
PitResult RoabpPit(const Abp& abp);

// Converts to a ROABP first; variables are unchanged by the conversion so the
// witness applies to the input as is. kInvalidModel if not strict-interval.
PitResult StrictIntervalPit(const Abp& abp);

}  // namespace boundread

#endif  // BOUNDREAD_PIT_PIT_H_
