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

#ifndef BOUNDREAD_HARDPOLY_RY_H_
#define BOUNDREAD_HARDPOLY_RY_H_

#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "boundread/core/field.h"
#include "boundread/core/multilinear.h"
#include "boundread/core/rng.h"
#include "boundread/hardpoly/block_structure.h"
#include "boundread/models/formula.h"

namespace boundread {

// Values for the auxiliary variables w_{i,l,j}, keyed by the global variable
// indices (v_i, v_l, v_j) of the generating list.
class WAssignment {
 public:
  using Key = std::tuple<int, int, int>;

  void Set(int i, int l, int j, uint64_t value) { values_[{i, l, j}] = value; }
  // kInvalidArgument when the key is missing.
  uint64_t Get(int i, int l, int j) const;
  size_t size() const { return values_.size(); }
  const std::map<Key, uint64_t>& values() const { return values_; }

  // Every key the recursion over `varlist` can touch, in lexicographic order
  // of positions (i, j, l).
  static std::vector<Key> RequiredKeys(std::span<const int> varlist);
  // Fills the required keys with nonzero values drawn in RequiredKeys order.
  void FillRandom(std::span<const int> varlist, const Field& field, SplitMix64& rng);
  void FillConstant(std::span<const int> varlist, uint64_t value);

  static WAssignment Random(std::span<const int> varlist, const Field& field, uint64_t seed);
  // One stream, blocks in order.
  static WAssignment RandomForBlocks(const BlockStructure& bs, const Field& field, uint64_t seed);

 private:
  std::map<Key, uint64_t> values_;
};

// f_RY on the ordered list: f(i,j) = (1 + x_i x_j) f(i+1,j-1)
//   + sum_{l in [i+1, j-2], l-i odd} w_{i,l,j} f(i,l) f(l+1,j),
// with f = 1 on the empty interval. kInvalidArgument on an odd-length list.
MultilinearPoly GenerateRy(int n, const Field& field, std::span<const int> varlist,
                           const WAssignment& w);

// Product of f_RY over the blocks.
MultilinearPoly GeneratePry(const BlockStructure& bs, const Field& field, const WAssignment& w);

// Top product over per-block sum-of-products formulas.
Formula GeneratePryFormula(const BlockStructure& bs, const Field& field, const WAssignment& w);

// Sum-of-products formula of a polynomial: one product per monomial, the
// coefficient leading when it is not 1.
Gate SopGate(const MultilinearPoly& f);

}  // namespace boundread

#endif  // BOUNDREAD_HARDPOLY_RY_H_
