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

#ifndef BOUNDREAD_HARDPOLY_DMPY_H_
#define BOUNDREAD_HARDPOLY_DMPY_H_

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "boundread/core/field.h"
#include "boundread/core/multilinear.h"
#include "boundread/models/abp.h"
#include "boundread/partitions/partition.h"
#include "boundread/partitions/sampling.h"

namespace boundread {

// One complete run of the arc process and the pairing it produces.
struct ArcSequence {
  std::vector<ArcMove> moves;
  int pairing = 0;  // index into ArcEnumeration::pairings
};

struct ArcEnumeration {
  // Distinct pairings, sorted.
  std::vector<Pairing> pairings;
  // All 3^(n/2 - 1) move sequences, in lexicographic move order.
  std::vector<ArcSequence> sequences;

  // Number of sequences producing each pairing.
  std::vector<int> Multiplicities() const;
};

// n even, 2 <= n <= 16 (kInvalidArgument otherwise).
ArcEnumeration EnumerateArcPairings(int n);

// A transition of the smABP: applying `move` at `step` (1-based, the arc
// then covering 2*step points) to the arc starting at `start`.
struct TagKey {
  int step;
  int start;
  ArcMove move;
  friend auto operator<=>(const TagKey&, const TagKey&) = default;
};

// lambda_P per pairing, and per-transition tags for the smABP.
class LambdaAssignment {
 public:
  void SetLambda(const Pairing& p, uint64_t value) { lambda_[p] = value; }
  void SetTag(const TagKey& k, uint64_t value) { tags_[k] = value; }
  // kInvalidArgument when missing.
  uint64_t Lambda(const Pairing& p) const;
  uint64_t Tag(const TagKey& k) const;

  // Every transition key of the smABP on n points, sorted.
  static std::vector<TagKey> TransitionKeys(int n);

  // All values equal to `value`.
  static LambdaAssignment Uniform(int n, uint64_t value);
  // Nonzero values: lambdas in sorted pairing order, then tags in key order.
  static LambdaAssignment Random(int n, const Field& field, uint64_t seed);

 private:
  std::map<Pairing, uint64_t> lambda_;
  std::map<TagKey, uint64_t> tags_;
};

// M_P = prod over pairs (x_a + x_b).
MultilinearPoly PairingMonomial(const Pairing& p, const Field& field);

// sum_P lambda_P M_P over the arc pairings of [n].
MultilinearPoly GenerateDmpy(int n, const Field& field, const LambdaAssignment& lambda);

// Layered program whose layer k holds the arcs of 2k points (by start
// index); each transition becomes two parallel edges tag*x_a, tag*x_b. Each
// move sequence contributes (product of its tags) * M_P.
Abp GenerateDmpySmAbp(int n, const Field& field, const LambdaAssignment& tags);

}  // namespace boundread

#endif  // BOUNDREAD_HARDPOLY_DMPY_H_
