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

#ifndef BOUNDREAD_PARTITIONS_PARTITION_H_
#define BOUNDREAD_PARTITIONS_PARTITION_H_

#include <span>
#include <utility>
#include <vector>

#include "boundread/core/multilinear.h"
#include "json.hpp"

namespace boundread {

// Total map [n] -> {Y, Z}, stored as the mask of Y.
class Partition {
 public:
  static constexpr int kMaxVars = 64;

  Partition(int n, VarMask y);
  static Partition FromY(int n, std::span<const int> y);

  int num_vars() const { return n_; }
  VarMask y_mask() const { return y_; }
  VarMask z_mask() const { return all() & ~y_; }
  bool in_y(int i) const { return (y_ >> i) & 1; }
  int y_size() const;
  int z_size() const { return n_ - y_size(); }
  bool is_equipartition() const { return 2 * y_size() == n_; }
  std::vector<int> y_indices() const;
  std::vector<int> z_indices() const;
  Partition Swapped() const { return Partition(n_, z_mask()); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  VarMask all() const { return n_ == 64 ? ~VarMask{0} : (VarMask{1} << n_) - 1; }

  int n_;
  VarMask y_;
};

// Perfect matching on [n]; pairs kept as (min, max), sorted.
class Pairing {
 public:
  // kInvalidArgument unless the pairs form a perfect matching of [n].
  Pairing(int n, std::vector<std::pair<int, int>> pairs);

  int num_vars() const { return n_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing& a, const Pairing& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

// K equal classes S_1..S_K partitioning [n].
class Coloring {
 public:
  // kInvalidArgument unless the classes are disjoint, cover [n] and have
  // equal sizes.
  Coloring(int n, std::vector<VarMask> classes);
  // S_c = {c*n/K, ..., (c+1)*n/K - 1}.
  static Coloring Contiguous(int n, int k);
  // S_c = the c-th run of n/K consecutive entries of the order.
  static Coloring FromOrder(std::span<const int> order, int k);

  int num_vars() const { return n_; }
  int num_colors() const { return static_cast<int>(classes_.size()); }
  const std::vector<VarMask>& classes() const { return classes_; }

 private:
  int n_;
  std::vector<VarMask> classes_;
};

nlohmann::json PartitionToJson(const Partition& phi);
// Reads {"Y": [...]} with an optional "n"; `default_n` is used when "n" is
// absent. kParse on malformed input.
Partition PartitionFromJson(const nlohmann::json& j, int default_n = -1);
nlohmann::json PairingToJson(const Pairing& pairing);
Pairing PairingFromJson(const nlohmann::json& j, int default_n = -1);

}  // namespace boundread

#endif  // BOUNDREAD_PARTITIONS_PARTITION_H_
