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

#include <gtest/gtest.h>

#include <algorithm>

#include "boundread/core/error.h"
#include "boundread/hardpoly/ry.h"
#include "boundread/partitions/sampling.h"
#include "boundread/rank/pd_matrix.h"
#include "test_util.h"

namespace boundread {
namespace {

using namespace testing;  // NOLINT

const Partition kSplit(2, 0b01);  // x0 -> Y, x1 -> Z

TEST(PdMatrixTest, Examples) {
  const PdMatrix a = BuildPdMatrix(Poly(2, {{M({0}), 1}, {M({1}), 1}}), kSplit);
  EXPECT_EQ(a.rows(), 2);
  EXPECT_EQ(a.data(), (std::vector<uint64_t>{0, 1, 1, 0}));
  const PdMatrix b = BuildPdMatrix(Poly(2, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}), kSplit);
  EXPECT_EQ(b.data(), (std::vector<uint64_t>{1, 1, 1, 1}));
  EXPECT_EQ(BuildPdMatrix(MultilinearPoly(2, Field()), kSplit).data(),
            (std::vector<uint64_t>{0, 0, 0, 0}));
}

TEST(PdMatrixTest, Errors) {
  try {
    BuildPdMatrix(MultilinearPoly(3, Field()), kSplit);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    RankOf(MultilinearPoly(16, Field()), Partition(16, 0x7fff));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(RankTest, Examples) {
  EXPECT_EQ(RankOf(Poly(2, {{0, 1}, {3, 1}}), kSplit), 2);
  EXPECT_EQ(RankOf(Poly(2, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}), kSplit), 1);
  EXPECT_EQ(RankOf(MultilinearPoly(2, Field()), kSplit), 0);
  const std::vector<int> vars{0, 1, 2, 3};
  const auto ry = GenerateRy(4, Field(), vars, WAssignment::Random(vars, Field(), 12));
  EXPECT_EQ(RankOf(ry, Partition(4, 0b0011)), 4);
}

TEST(RankTest, MatrixRankOracle) {
  const Field f7(7);
  // Row 3 = row 1 + 2 row 2.
  EXPECT_EQ(MatrixRank({1, 2, 3, 0, 1, 4, 1, 4, 11 % 7}, 3, 3, f7), 2);
  EXPECT_EQ(MatrixRank({0, 0, 0, 0}, 2, 2, f7), 0);
  EXPECT_EQ(MatrixRank({0, 1, 1, 0}, 2, 2, f7), 2);
}

// The compressed rank must agree with elimination on the full matrix.
TEST(RankProperty, CompressedMatchesDense) {
  SplitMix64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng.Uniform(10));
    const auto f = RandomPoly(n, static_cast<int>(rng.Uniform(30)), rng);
    const Partition phi(n, rng.Uniform(VarMask{1} << n));
    const PdMatrix m = BuildPdMatrix(f, phi);
    ASSERT_EQ(RankOf(f, phi), MatrixRank(m.data(), m.rows(), m.cols(), f.field()));
  }
}

TEST(RankProperty, Laws) {
  SplitMix64 rng(67);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng.Uniform(9));
    const Partition phi(n, rng.Uniform(VarMask{1} << n));
    const auto g = RandomPoly(n, 1 + static_cast<int>(rng.Uniform(20)), rng);
    const auto h = RandomPoly(n, 1 + static_cast<int>(rng.Uniform(20)), rng);
    const int rg = RankOf(g, phi), rh = RankOf(h, phi);
    EXPECT_LE(RankOf(Add(g, h), phi), rg + rh);
    EXPECT_LE(rg, 1 << std::min(phi.y_size(), phi.z_size()));
    EXPECT_EQ(RankOf(g, phi.Swapped()), rg);
    EXPECT_EQ(BuildPdMatrix(g, phi.Swapped()), BuildPdMatrix(g, phi).Transposed());
    const VarMask left = rng.Uniform(VarMask{1} << n);
    const auto p = RandomPolyOn(n, left, 6, rng);
    const auto q = RandomPolyOn(n, ((VarMask{1} << n) - 1) & ~left, 6, rng);
    EXPECT_EQ(RankOf(Multiply(p, q), phi), RankOf(p, phi) * RankOf(q, phi));
  }
}

// Variable-disjoint operands do not make the rank additive: x0 + x1 with
// both variables in Y is a single column. Additivity does hold once every
// monomial of both operands meets Y and Z, since the matrices then occupy
// disjoint row and column blocks.
TEST(RankProperty, DisjointSumEquality) {
  const Partition both_y(2, M({0, 1}));
  const auto x0 = Poly(2, {{M({0}), 1}}), x1 = Poly(2, {{M({1}), 1}});
  EXPECT_EQ(RankOf(x0, both_y) + RankOf(x1, both_y), 2);
  EXPECT_EQ(RankOf(Add(x0, x1), both_y), 1);

  SplitMix64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng.Uniform(7));
    const VarMask all = (VarMask{1} << n) - 1;
    const Partition phi(n, rng.Uniform(all + 1));
    const VarMask a = rng.Uniform(all + 1);
    auto straddling = [&](VarMask vars) {
      std::vector<MultilinearPoly::Term> terms;
      for (int k = 0; k < 12; ++k) {
        const VarMask m = rng.Next() & vars;
        if ((m & phi.y_mask()) && (m & phi.z_mask())) terms.push_back({m, rng.NonZeroFieldValue(Field())});
      }
      return MultilinearPoly::FromTerms(n, Field(), terms);
    };
    const auto g = straddling(a), h = straddling(all & ~a);
    EXPECT_EQ(RankOf(Add(g, h), phi), RankOf(g, phi) + RankOf(h, phi));
  }
}

TEST(RankProperty, PryFullRankUnderDb) {
  const Field f;
  for (auto [n, r] : {std::pair{4, 2}, {8, 2}, {8, 4}, {12, 2}, {16, 4}}) {
    const BlockStructure bs(n, r);
    const auto pry = GeneratePry(bs, f, WAssignment::RandomForBlocks(bs, f, 1000 + n + r));
    for (uint64_t seed = 0; seed < 10; ++seed) {
      EXPECT_EQ(RankOf(pry, SampleDb(bs, seed)), 1 << (n / 2)) << n << "," << r;
    }
  }
}

}  // namespace
}  // namespace boundread
