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

#include "boundread/hardpoly/ry.h"

#include <numeric>
#include <optional>
#include <string>

#include "boundread/core/error.h"

namespace boundread {

uint64_t WAssignment::Get(int i, int l, int j) const {
  auto it = values_.find({i, l, j});
  if (it == values_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "no value for w_{" + std::to_string(i) + "," +
                                                 std::to_string(l) + "," + std::to_string(j) + "}");
  }
  return it->second;
}

std::vector<WAssignment::Key> WAssignment::RequiredKeys(std::span<const int> varlist) {
  const int m = static_cast<int>(varlist.size());
  std::vector<Key> keys;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 3; j < m; j += 2) {
      for (int l = i + 1; l <= j - 2; l += 2) keys.emplace_back(varlist[i], varlist[l], varlist[j]);
    }
  }
  return keys;
}

void WAssignment::FillRandom(std::span<const int> varlist, const Field& field, SplitMix64& rng) {
  for (const Key& k : RequiredKeys(varlist)) values_[k] = rng.NonZeroFieldValue(field);
}

void WAssignment::FillConstant(std::span<const int> varlist, uint64_t value) {
  for (const Key& k : RequiredKeys(varlist)) values_[k] = value;
}

WAssignment WAssignment::Random(std::span<const int> varlist, const Field& field, uint64_t seed) {
  SplitMix64 rng(seed);
  WAssignment w;
  w.FillRandom(varlist, field, rng);
  return w;
}

WAssignment WAssignment::RandomForBlocks(const BlockStructure& bs, const Field& field,
                                         uint64_t seed) {
  SplitMix64 rng(seed);
  WAssignment w;
  for (int b = 0; b < bs.num_blocks(); ++b) w.FillRandom(bs.Block(b), field, rng);
  return w;
}

MultilinearPoly GenerateRy(int n, const Field& field, std::span<const int> varlist,
                           const WAssignment& w) {
  const int m = static_cast<int>(varlist.size());
  if (m % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "RY polynomial needs an even number of variables, got " + std::to_string(m));
  }
  VarMask seen = 0;
  for (int v : varlist) {
    if (v < 0 || v >= n || ((seen >> v) & 1)) {
      throw Error(ErrorCode::kInvalidArgument, "variable list must be distinct indices below n");
    }
    seen |= VarMask{1} << v;
  }
  // memo[i][j] for the interval of positions [i, j]; j == i - 1 is empty.
  std::vector<std::vector<std::optional<MultilinearPoly>>> memo(
      m + 1, std::vector<std::optional<MultilinearPoly>>(m + 1));
  auto f = [&](auto&& self, int i, int j) -> const MultilinearPoly& {
    auto& slot = memo[i][j + 1];
    if (slot) return *slot;
    if (j < i) {
      slot = MultilinearPoly::Constant(n, field, 1);
      return *slot;
    }
    const MultilinearPoly pair_term = Add(
        MultilinearPoly::Constant(n, field, 1),
        MultilinearPoly::Monomial(n, field, (VarMask{1} << varlist[i]) | (VarMask{1} << varlist[j])));
    MultilinearPoly acc = Multiply(pair_term, self(self, i + 1, j - 1));
    for (int l = i + 1; l <= j - 2; l += 2) {
      const uint64_t wv = w.Get(varlist[i], varlist[l], varlist[j]);
      acc = Add(acc, Multiply(self(self, i, l), self(self, l + 1, j)).Scaled(wv));
    }
    slot = std::move(acc);
    return *slot;
  };
  return f(f, 0, m - 1);
}

MultilinearPoly GeneratePry(const BlockStructure& bs, const Field& field, const WAssignment& w) {
  MultilinearPoly out = MultilinearPoly::Constant(bs.n(), field, 1);
  for (int b = 0; b < bs.num_blocks(); ++b) {
    out = Multiply(out, GenerateRy(bs.n(), field, bs.Block(b), w));
  }
  return out;
}

Gate SopGate(const MultilinearPoly& f) {
  std::vector<Gate> monomials;
  for (const auto& t : f.terms()) {
    std::vector<Gate> factors;
    if (t.coeff != 1 || t.mask == 0) factors.push_back(Gate::Constant(t.coeff));
    for (int i = 0; i < f.num_vars(); ++i) {
      if ((t.mask >> i) & 1) factors.push_back(Gate::Variable(i));
    }
    monomials.push_back(factors.size() == 1 ? factors[0] : Gate::Product(std::move(factors)));
  }
  if (monomials.empty()) return Gate::Constant(0);
  return monomials.size() == 1 ? monomials[0] : Gate::Sum(std::move(monomials));
}

Formula GeneratePryFormula(const BlockStructure& bs, const Field& field, const WAssignment& w) {
  std::vector<Gate> blocks;
  for (int b = 0; b < bs.num_blocks(); ++b) {
    blocks.push_back(SopGate(GenerateRy(bs.n(), field, bs.Block(b), w)));
  }
  return Formula(bs.n(), field, Gate::Product(std::move(blocks)));
}

}  // namespace boundread
