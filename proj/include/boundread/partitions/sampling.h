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

#ifndef BOUNDREAD_PARTITIONS_SAMPLING_H_
#define BOUNDREAD_PARTITIONS_SAMPLING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "boundread/hardpoly/block_structure.h"
#include "boundread/partitions/partition.h"

namespace boundread {

// Uniform over the C(n, n/2) equi-partitions: shuffle [n], the first half
// goes to Y.
Partition SampleEquipartition(int n, uint64_t seed);

// Independent equi-partition of every block, drawn in block order from a
// single stream.
Partition SampleDb(const BlockStructure& bs, uint64_t seed);

// Moves of the arc process; each extends the covered arc [L, R] (mod n).
enum class ArcMove { kLeft, kMiddle, kRight };

// Applies a move to the arc (l, r), returning the new pair and updating the
// arc in place. Indices are reduced mod n.
std::pair<int, int> ApplyArcMove(int n, ArcMove move, int& l, int& r);

struct ArcSample {
  Pairing pairing;
  // Pairs in generation order, first pair (0, 1).
  std::vector<std::pair<int, int>> sequence;
};

// n/2-step arc process, each move with probability 1/3 (Uniform(3)).
ArcSample SampleArcPairing(int n, uint64_t seed);

struct ArcPartition {
  Pairing pairing;
  Partition partition;
};

// Arc pairing followed by one coin per pair, in generation order; heads
// puts the smaller endpoint in Y. Both stages share one stream.
ArcPartition SampleArcPartition(int n, uint64_t seed);

// Pairs consecutive entries (sigma_0, sigma_1), (sigma_2, sigma_3), ...
Pairing FArcPartition(std::span<const int> sigma);

// Number of common pairs.
int Similarity(const Pairing& p, const Pairing& q);

struct ViolationReport {
  // |V_c|: pairs with exactly one endpoint in S_c.
  std::vector<int> per_color;
  // Number of colors with |V_c| >= threshold.
  int g = 0;
};
ViolationReport Violations(const Pairing& pairing, const Coloring& coloring, int threshold);

}  // namespace boundread

#endif  // BOUNDREAD_PARTITIONS_SAMPLING_H_
