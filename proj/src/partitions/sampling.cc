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

#include "boundread/partitions/sampling.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "boundread/core/error.h"
#include "boundread/core/rng.h"

namespace boundread {
namespace {

void RequireEven(int n) {
  if (n <= 0 || n % 2 != 0 || n > Partition::kMaxVars) {
    throw Error(ErrorCode::kInvalidArgument, "n must be even and in [2, 64], got " +
                                                 std::to_string(n));
  }
}

int Mod(int a, int n) { return ((a % n) + n) % n; }

ArcSample RunArcProcess(int n, SplitMix64& rng) {
  RequireEven(n);
  std::vector<std::pair<int, int>> seq{{0, 1}};
  int l = 0, r = 1;
  for (int step = 1; step < n / 2; ++step) {
    seq.push_back(ApplyArcMove(n, static_cast<ArcMove>(rng.Uniform(3)), l, r));
  }
  return {Pairing(n, seq), seq};
}

}  // namespace

Partition SampleEquipartition(int n, uint64_t seed) {
  RequireEven(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(seed);
  rng.Shuffle(std::span<int>(perm));
  return Partition::FromY(n, std::span<const int>(perm.data(), n / 2));
}

Partition SampleDb(const BlockStructure& bs, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> y;
  for (int b = 0; b < bs.num_blocks(); ++b) {
    std::vector<int> block = bs.Block(b);
    rng.Shuffle(std::span<int>(block));
    y.insert(y.end(), block.begin(), block.begin() + bs.r() / 2);
  }
  return Partition::FromY(bs.n(), y);
}

std::pair<int, int> ApplyArcMove(int n, ArcMove move, int& l, int& r) {
  std::pair<int, int> pair;
  switch (move) {
    case ArcMove::kLeft:
      pair = {Mod(l - 2, n), Mod(l - 1, n)};
      l = Mod(l - 2, n);
      break;
    case ArcMove::kMiddle:
      pair = {Mod(l - 1, n), Mod(r + 1, n)};
      l = Mod(l - 1, n);
      r = Mod(r + 1, n);
      break;
    case ArcMove::kRight:
      pair = {Mod(r + 1, n), Mod(r + 2, n)};
      r = Mod(r + 2, n);
      break;
  }
  if (pair.first > pair.second) std::swap(pair.first, pair.second);
  return pair;
}

ArcSample SampleArcPairing(int n, uint64_t seed) {
  SplitMix64 rng(seed);
  return RunArcProcess(n, rng);
}

ArcPartition SampleArcPartition(int n, uint64_t seed) {
  SplitMix64 rng(seed);
  ArcSample arc = RunArcProcess(n, rng);
  VarMask y = 0;
  for (auto [a, b] : arc.sequence) y |= VarMask{1} << (rng.Coin() ? a : b);
  return {arc.pairing, Partition(n, y)};
}

Pairing FArcPartition(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  RequireEven(n);
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument, "order is not a permutation of [n]");
    }
    seen[v] = true;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; i += 2) pairs.emplace_back(sigma[i], sigma[i + 1]);
  return Pairing(n, std::move(pairs));
}

int Similarity(const Pairing& p, const Pairing& q) {
  if (p.num_vars() != q.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "pairings over different point sets");
  }
  int common = 0;
  for (const auto& pair : p.pairs()) {
    if (std::binary_search(q.pairs().begin(), q.pairs().end(), pair)) ++common;
  }
  return common;
}

ViolationReport Violations(const Pairing& pairing, const Coloring& coloring, int threshold) {
  if (pairing.num_vars() != coloring.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "pairing and coloring over different point sets");
  }
  ViolationReport out;
  for (VarMask cls : coloring.classes()) {
    int v = 0;
    for (auto [a, b] : pairing.pairs()) {
      if (((cls >> a) & 1) != ((cls >> b) & 1)) ++v;
    }
    out.per_color.push_back(v);
    if (v >= threshold) ++out.g;
  }
  return out;
}

}  // namespace boundread
