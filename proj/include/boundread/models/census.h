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

#ifndef BOUNDREAD_MODELS_CENSUS_H_
#define BOUNDREAD_MODELS_CENSUS_H_

#include "boundread/models/formula.h"
#include "boundread/partitions/partition.h"

namespace boundread {

// Gates of a binary formula with at least one variable input:
//   A: sum, both inputs variables      B: product, both inputs variables
//   C: sum, exactly one variable input D: product, exactly one variable input
// a_one / a_two split type A by the rank (1 or 2) of the gate's output under
// the partition.
struct GateCensus {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int a_one = 0;
  int a_two = 0;

  friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

// kInvalidModel on a non-binary formula, kDimensionMismatch if the partition
// is over a different n.
GateCensus TakeGateCensus(const Formula& formula, const Partition& phi);

// log2 of 2^(a_two + 2 a_one/3 + 2b/3 + 9c/20), the per-ROF rank estimate.
double CensusLog2Bound(const GateCensus& census);

}  // namespace boundread

#endif  // BOUNDREAD_MODELS_CENSUS_H_
