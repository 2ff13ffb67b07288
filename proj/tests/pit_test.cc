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

#include <chrono>

#include "boundread/core/error.h"
#include "boundread/hardpoly/random_models.h"
#include "boundread/pit/pit.h"
#include "boundread/transforms/roabp_convert.h"
#include "test_util.h"

namespace boundread {
namespace {

using namespace testing;  // NOLINT

Abp Negated(const Abp& p) { return GlueParallel(p, ScaleAbp(p, p.field().Neg(1))); }

// The witness must name a monomial of the expansion, and the indicator point
// must evaluate to its coefficient.
void ExpectVerdictMatches(const Abp& abp, const PitResult& r) {
  const MultilinearPoly f = ExpandAbp(abp);
  ASSERT_EQ(r.zero, f.is_zero());
  if (r.zero) return;
  EXPECT_EQ(f.coeff(r.witness_mask).value(), r.witness_coeff);
  EXPECT_NE(r.witness_coeff, 0u);
  EXPECT_EQ(EvaluateAbp(abp, r.witness_point), r.witness_coeff);
}

TEST(RoabpPitTest, SinglePath) {
  const Abp p = MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 0}, {1, 2, 1}});
  const PitResult r = RoabpPit(p);
  EXPECT_FALSE(r.zero);
  EXPECT_EQ(r.witness_mask, M({0, 1}));
  EXPECT_EQ(r.witness_coeff, 1u);
  EXPECT_EQ(r.witness_point, (std::vector<uint64_t>{1, 1}));
}

TEST(RoabpPitTest, MinimalWitness) {
  // (1 + x0)(1 + x1) - 1 = x0 + x1 + x0x1; indicator of x0x1 would give 3.
  const Field F;
  const Abp p = MakeAbp(2, {{0}, {1, 2}, {3}},
                        {{0, 1, -1}, {0, 1, 0}, {1, 3, -1}, {1, 3, 1}, {0, 2, -1, F.Neg(1)},
                         {2, 3, -1}});
  const PitResult r = RoabpPit(p);
  EXPECT_FALSE(r.zero);
  EXPECT_EQ(std::popcount(r.witness_mask), 1);
  ExpectVerdictMatches(p, r);
}

TEST(RoabpPitTest, ConstantsAndEmpty) {
  EXPECT_FALSE(RoabpPit(MakeAbp(1, {{0}, {1}}, {{0, 1, -1, 5}})).zero);
  EXPECT_TRUE(RoabpPit(MakeAbp(1, {{0}, {1}}, {})).zero);
  const PitResult c = RoabpPit(MakeAbp(1, {{0}, {1}}, {{0, 1, -1, 5}}));
  EXPECT_EQ(c.witness_mask, 0u);
  EXPECT_EQ(c.witness_coeff, 5u);
}

TEST(RoabpPitTest, NegatedCopyIsZero) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const Abp p = RandomRoabp(8, 3, seed);
    const PitResult r = RoabpPit(Negated(p));
    EXPECT_TRUE(r.zero) << seed;
  }
}

TEST(RoabpPitTest, RejectsNonRoabp) {
  EXPECT_THROW(RoabpPit(TwoBranch(2, 0, 1)), Error);
}

TEST(RoabpPitProperty, MatchesExpansion) {
  int zeros = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + int(seed % 12);
    const Abp p = RandomRoabp(n, 1 + int(seed % 4), seed);
    const PitResult r = RoabpPit(p);
    ExpectVerdictMatches(p, r);
    EXPECT_LE(r.max_basis, size_t(std::max(1, p.width())));
    zeros += r.zero;
  }
  EXPECT_LT(zeros, 200);
}

TEST(RoabpPitProperty, SmallField) {
  // Over F_5 accidental cancellations are common.
  const Field F(5);
  int zeros = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const Abp p = RandomRoabp(1 + int(seed % 5), 2, seed, F);
    const PitResult r = RoabpPit(p);
    ExpectVerdictMatches(p, r);
    zeros += r.zero;
  }
  EXPECT_GT(zeros, 0);
}

TEST(RoabpPitProperty, Deterministic) {
  const Abp p = RandomRoabp(10, 4, 99);
  const PitResult a = RoabpPit(p), b = RoabpPit(p);
  EXPECT_EQ(a.witness_mask, b.witness_mask);
  EXPECT_EQ(a.witness_coeff, b.witness_coeff);
}

TEST(RoabpPitProperty, WideAndLongIsFast) {
  const Abp p = RandomRoabp(64, 32, 7);
  const auto t0 = std::chrono::steady_clock::now();
  const PitResult r = RoabpPit(p);
  const PitResult z = RoabpPit(Negated(p));
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_FALSE(r.zero);
  EXPECT_TRUE(z.zero);
  EXPECT_EQ(EvaluateAbp(p, r.witness_point), r.witness_coeff);
  EXPECT_LT(sec, 1.0);
}

TEST(StrictIntervalPitTest, TwoBranch) {
  const PitResult r = StrictIntervalPit(TwoBranch(2, 0, 1));
  EXPECT_FALSE(r.zero);
  EXPECT_EQ(r.witness_mask, M({0, 1}));
  EXPECT_EQ(r.witness_coeff, 2u);
  EXPECT_TRUE(StrictIntervalPit(TwoBranch(2, 0, 1, Field().Neg(1))).zero);
}

TEST(StrictIntervalPitTest, RejectsNonInterval) {
  // The path through node 1 reads x1 twice.
  const Abp p = MakeAbp(3, {{0}, {1, 2}, {3}}, {{0, 1, 1}, {1, 3, 1}, {0, 2, 0}, {2, 3, 2}});
  EXPECT_THROW(StrictIntervalPit(p), Error);
}

TEST(StrictIntervalPitProperty, MatchesExpansion) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + int(seed % 11);
    const Abp p = RandomStrictIntervalAbp(n, 4 + int(seed % 40), seed);
    ExpectVerdictMatches(p, StrictIntervalPit(p));
    EXPECT_TRUE(StrictIntervalPit(Negated(p)).zero) << seed;
  }
}

}  // namespace
}  // namespace boundread
