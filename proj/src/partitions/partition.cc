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

#include "boundread/partitions/partition.h"

#include <algorithm>
#include <bit>
#include <string>

#include "boundread/core/error.h"

namespace boundread {
namespace {

void CheckN(int n) {
  if (n < 0 || n > Partition::kMaxVars) {
    throw Error(ErrorCode::kInvalidArgument, "partition over " + std::to_string(n) + " variables");
  }
}

int IntField(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(ErrorCode::kParse, std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

int ResolveN(const nlohmann::json& j, int default_n) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "expected a JSON object");
  if (j.contains("n")) return IntField(j, "n");
  if (default_n < 0) throw Error(ErrorCode::kParse, "missing field \"n\"");
  return default_n;
}

}  // namespace

Partition::Partition(int n, VarMask y) : n_(n), y_(y) {
  CheckN(n);
  if ((y & ~all()) != 0) throw Error(ErrorCode::kInvalidArgument, "Y contains indices >= n");
}

Partition Partition::FromY(int n, std::span<const int> y) {
  CheckN(n);
  VarMask mask = 0;
  for (int i : y) {
    if (i < 0 || i >= n) {
      throw Error(ErrorCode::kInvalidArgument, "index " + std::to_string(i) + " outside [n]");
    }
    mask |= VarMask{1} << i;
  }
  return Partition(n, mask);
}

int Partition::y_size() const { return std::popcount(y_); }

std::vector<int> Partition::y_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (in_y(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> Partition::z_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (!in_y(i)) out.push_back(i);
  }
  return out;
}

Pairing::Pairing(int n, std::vector<std::pair<int, int>> pairs) : n_(n) {
  if (n < 0 || n % 2 != 0 || n > Partition::kMaxVars) {
    throw Error(ErrorCode::kInvalidArgument, "pairing needs an even n <= 64");
  }
  if (pairs.size() * 2 != static_cast<size_t>(n)) {
    throw Error(ErrorCode::kInvalidArgument, "pairing of size " + std::to_string(pairs.size()) +
                                                 " on " + std::to_string(n) + " points");
  }
  VarMask seen = 0;
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n || a == b || ((seen >> a) & 1) || ((seen >> b) & 1)) {
      throw Error(ErrorCode::kInvalidArgument, "pairs are not a perfect matching");
    }
    seen |= (VarMask{1} << a) | (VarMask{1} << b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

Coloring::Coloring(int n, std::vector<VarMask> classes) : n_(n), classes_(std::move(classes)) {
  if (classes_.empty() || n % static_cast<int>(classes_.size()) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "K must divide n");
  }
  const int per = n / static_cast<int>(classes_.size());
  VarMask seen = 0;
  for (VarMask c : classes_) {
    if ((c & seen) != 0 || std::popcount(c) != per) {
      throw Error(ErrorCode::kInvalidArgument, "color classes must be disjoint and equal-sized");
    }
    seen |= c;
  }
  const VarMask all = n == 64 ? ~VarMask{0} : (VarMask{1} << n) - 1;
  if (seen != all) throw Error(ErrorCode::kInvalidArgument, "color classes must cover [n]");
}

Coloring Coloring::Contiguous(int n, int k) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return FromOrder(order, k);
}

Coloring Coloring::FromOrder(std::span<const int> order, int k) {
  const int n = static_cast<int>(order.size());
  if (k <= 0 || n % k != 0) throw Error(ErrorCode::kInvalidArgument, "K must divide n");
  std::vector<VarMask> classes(k, 0);
  const int per = n / k;
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n) throw Error(ErrorCode::kInvalidArgument, "bad order");
    classes[i / per] |= VarMask{1} << order[i];
  }
  return Coloring(n, std::move(classes));
}

nlohmann::json PartitionToJson(const Partition& phi) {
  return {{"n", phi.num_vars()}, {"Y", phi.y_indices()}};
}

Partition PartitionFromJson(const nlohmann::json& j, int default_n) {
  const int n = ResolveN(j, default_n);
  if (!j.contains("Y") || !j["Y"].is_array()) throw Error(ErrorCode::kParse, "missing array \"Y\"");
  std::vector<int> y;
  for (const auto& v : j["Y"]) {
    if (!v.is_number_integer()) throw Error(ErrorCode::kParse, "\"Y\" entries must be integers");
    y.push_back(v.get<int>());
  }
  return Partition::FromY(n, y);
}

nlohmann::json PairingToJson(const Pairing& pairing) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : pairing.pairs()) pairs.push_back({a, b});
  return {{"n", pairing.num_vars()}, {"pairs", pairs}};
}

Pairing PairingFromJson(const nlohmann::json& j, int default_n) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array()) {
    throw Error(ErrorCode::kParse, "missing array \"pairs\"");
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw Error(ErrorCode::kParse, "pairs must be [i, j] integer arrays");
    }
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  const int n = j.contains("n") ? IntField(j, "n")
                                : (default_n >= 0 ? default_n : static_cast<int>(2 * pairs.size()));
  return Pairing(n, std::move(pairs));
}

}  // namespace boundread
