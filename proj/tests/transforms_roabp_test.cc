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
#include "boundread/hardpoly/random_models.h"
#include "boundread/models/validators.h"
#include "boundread/transforms/roabp_convert.h"
#include "test_util.h"

namespace boundread {
namespace {

using namespace testing;  // NOLINT

std::vector<int> Identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Random layered program over few variables with mixed edges; callers keep
// the ones that pass the strict-interval check. These exercise node mixes
// the structured generator never produces.
Abp WildAbp(int n, SplitMix64& rng) {
  const int layers = 2 + static_cast<int>(rng.Uniform(4));
  AbpBuilder b(n, Field());
  std::vector<std::vector<int>> nodes(layers + 1);
  for (int k = 0; k <= layers; ++k) {
    b.AddLayer();
    const int count = (k == 0 || k == layers) ? 1 : 1 + static_cast<int>(rng.Uniform(3));
    for (int i = 0; i < count; ++i) nodes[k].push_back(b.AddNode(k));
  }
  for (int k = 0; k < layers; ++k) {
    for (int u : nodes[k]) {
      for (int v : nodes[k + 1]) {
        const uint64_t roll = rng.Uniform(4);
        if (roll == 0) continue;
        const int var = roll == 1 ? AbpEdge::kConstant : static_cast<int>(rng.Uniform(n));
        b.AddEdge(u, v, var, 1 + rng.Uniform(5));
      }
    }
  }
  return Prune(b.Build());
}

bool IsIdentityOrderRoabp(const Abp& p) {
  const RoabpCheck c = CheckObliviousRoabp(p);
  if (!c.report.ok) return false;
  return std::is_sorted(c.order.begin(), c.order.end());
}

TEST(ClassifyTest, Examples) {
  const Abp two = TwoBranch(2, 0, 1);
  const NodeClassification cls = ClassifyNodes(two);
  EXPECT_EQ(cls.tag[0], NodeTag::kTerminal);
  EXPECT_EQ(cls.tag[1], NodeTag::kAscending);
  EXPECT_EQ(cls.tag[2], NodeTag::kDescending);
  EXPECT_EQ(cls.tag[3], NodeTag::kTerminal);
  const Abp constant_mid = MakeAbp(2, {{0}, {1}, {2}, {3}}, {{0, 1, -1}, {1, 2, -1}, {2, 3, 0}});
  const NodeClassification c2 = ClassifyNodes(constant_mid);
  EXPECT_EQ(c2.tag[1], NodeTag::kAscending);
  EXPECT_TRUE(c2.neutral[1]);
}

TEST(SplitTest, Examples) {
  const AscDescSplit s = SplitAscDesc(TwoBranch(2, 0, 1));
  EXPECT_EQ(ExpandAbp(s.ascending), Poly(2, {{M({0, 1}), 1}}));
  EXPECT_EQ(ExpandAbp(s.descending), Poly(2, {{M({0, 1}), 1}}));
  const Abp asc = RandomRoabpInOrder(Identity(5), 5, 3, 9);
  const AscDescSplit only = SplitAscDesc(asc);
  EXPECT_TRUE(ExpandAbp(only.descending).is_zero());
  EXPECT_EQ(ExpandAbp(only.ascending), ExpandAbp(asc));
}

// A constant edge into a node that only reads later variables, then a
// descending tail: the path must survive in exactly one half.
TEST(SplitTest, EmptySpanNodesKeepPaths) {
  const Abp p = MakeAbp(3, {{0}, {1}, {2}, {3}}, {{0, 1, -1, 3}, {1, 2, 2}, {2, 3, 1}});
  ASSERT_TRUE(CheckStrictInterval(p).report.ok);
  const AscDescSplit s = SplitAscDesc(p);
  EXPECT_EQ(Add(ExpandAbp(s.ascending), ExpandAbp(s.descending)), ExpandAbp(p));
  // Constant-only program: all in the ascending half.
  const Abp c = MakeAbp(1, {{0}, {1}, {2}}, {{0, 1, -1, 2}, {1, 2, -1, 3}});
  const AscDescSplit sc = SplitAscDesc(c);
  EXPECT_EQ(ExpandAbp(sc.ascending), MultilinearPoly::Constant(1, Field(), 6));
  EXPECT_TRUE(ExpandAbp(sc.descending).is_zero());
}

void CheckSplitInvariants(const Abp& p) {
  const NodeClassification cls = ClassifyNodes(p);
  for (const AbpEdge& e : p.edges()) {
    const bool a_from = cls.tag[e.from] == NodeTag::kAscending && !cls.neutral[e.from];
    const bool d_from = cls.tag[e.from] == NodeTag::kDescending;
    const bool a_to = cls.tag[e.to] == NodeTag::kAscending && !cls.neutral[e.to];
    const bool d_to = cls.tag[e.to] == NodeTag::kDescending;
    ASSERT_FALSE((a_from && d_to) || (d_from && a_to)) << e.from << "->" << e.to;
  }
  const AscDescSplit s = SplitAscDesc(p);
  ASSERT_EQ(Add(ExpandAbp(s.ascending), ExpandAbp(s.descending)), ExpandAbp(p));
  const NodeClassification c1 = ClassifyNodes(s.ascending);
  const NodeClassification c2 = ClassifyNodes(s.descending);
  for (NodeTag t : c1.tag) ASSERT_NE(t, NodeTag::kDescending);
  for (size_t v = 0; v < c2.tag.size(); ++v) {
    ASSERT_TRUE(c2.tag[v] != NodeTag::kAscending || c2.neutral[v]);
  }
}

TEST(SplitProperty, StructuredCorpus) {
  SplitMix64 rng(71);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.Uniform(9));
    CheckSplitInvariants(RandomStrictIntervalAbp(n, 6 + static_cast<int>(rng.Uniform(55)), rng.Next()));
  }
}

TEST(SplitProperty, FilteredWildCorpus) {
  SplitMix64 rng(73);
  int kept = 0;
  for (int i = 0; i < 4000 && kept < 300; ++i) {
    const Abp p = WildAbp(2 + static_cast<int>(rng.Uniform(4)), rng);
    if (!CheckStrictInterval(p).report.ok) continue;
    ++kept;
    CheckSplitInvariants(p);
  }
  EXPECT_GE(kept, 300);
}

TEST(ReverseTest, Examples) {
  const Abp path = MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 0}, {1, 2, 1}});
  const Abp rev = ReverseAbp(path);
  EXPECT_EQ(ExpandAbp(rev), ExpandAbp(path));
  EXPECT_EQ(CheckObliviousRoabp(rev).order, (std::vector<int>{1, 0}));
  EXPECT_EQ(AbpSummary(ReverseAbp(rev)), AbpSummary(path));
  EXPECT_EQ(ReverseAbp(rev).edges(), path.edges());
  const Abp wide = MakeAbp(2, {{0}, {1, 2, 3}, {4}, {5}},
                           {{0, 1, 0}, {0, 2, 1}, {0, 3, -1}, {1, 4, 1}, {2, 4, 0}, {3, 4, -1}, {4, 5, -1}});
  const Abp wr = ReverseAbp(wide);
  for (int k = 0; k < wide.num_layers(); ++k) {
    EXPECT_EQ(wr.layers()[k].size(), wide.layers()[wide.num_layers() - 1 - k].size());
  }
  EXPECT_EQ(wr.size(), wide.size());
}

TEST(StaggerTest, PaddingAcrossSkippedVariable) {
  const Abp path = MakeAbp(3, {{0}, {1}, {2}}, {{0, 1, 0, 2}, {1, 2, 2, 3}});
  const Abp r = OneOrderToRoabp(path, Direction::kAscending);
  EXPECT_TRUE(IsIdentityOrderRoabp(r));
  EXPECT_EQ(ExpandAbp(r), ExpandAbp(path));
  // Layer 1 (reading x1) carries only the constant-1 pass-through.
  bool reads_x1 = false;
  for (const AbpEdge& e : r.edges()) reads_x1 = reads_x1 || e.var == 1;
  EXPECT_FALSE(reads_x1);
}

TEST(StaggerTest, DescendingAndErrors) {
  const Abp desc = MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 1}, {1, 2, 0}});
  const Abp r = OneOrderToRoabp(desc, Direction::kDescending);
  EXPECT_TRUE(IsIdentityOrderRoabp(r));
  EXPECT_EQ(ExpandAbp(r), Poly(2, {{M({0, 1}), 1}}));
  try {
    OneOrderToRoabp(desc, Direction::kAscending);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedClassification);
  }
  EXPECT_THROW(OneOrderToRoabp(TwoBranch(2, 0, 1), Direction::kAscending), Error);
}

TEST(StaggerTest, StaggeredRoabpIsReproduced) {
  SplitMix64 rng(79);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + static_cast<int>(rng.Uniform(8));
    const Abp p = RandomRoabpInOrder(Identity(n), n, 3, rng.Next());
    const Abp r = OneOrderToRoabp(p, Direction::kAscending);
    ASSERT_TRUE(IsIdentityOrderRoabp(r));
    ASSERT_EQ(ExpandAbp(r), ExpandAbp(p));
  }
}

TEST(SumRoabpsTest, Examples) {
  const Abp x1 = MakeAbp(2, {{0}, {1}}, {{0, 1, 0}});
  const Abp x2 = MakeAbp(2, {{0}, {1}}, {{0, 1, 1}});
  const Abp sum = SumRoabps(x1, x2);
  EXPECT_TRUE(CheckObliviousRoabp(sum).report.ok);
  EXPECT_EQ(ExpandAbp(sum), Poly(2, {{M({0}), 1}, {M({1}), 1}}));
  SplitMix64 rng(83);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + static_cast<int>(rng.Uniform(6));
    const Abp a = RandomRoabpInOrder(Identity(n), n, 1 + static_cast<int>(rng.Uniform(4)), rng.Next());
    const Abp b = RandomRoabpInOrder(Identity(n), n, 1 + static_cast<int>(rng.Uniform(4)), rng.Next());
    const Abp s = SumRoabps(a, b);
    ASSERT_TRUE(CheckObliviousRoabp(s).report.ok);
    ASSERT_EQ(ExpandAbp(s), Add(ExpandAbp(a), ExpandAbp(b)));
    ASSERT_LE(s.width(), a.width() + b.width() + 2);
    ASSERT_TRUE(ExpandAbp(SumRoabps(a, ScaleAbp(a, Field().Neg(1)))).is_zero());
  }
}

TEST(SumRoabpsTest, OrderMismatch) {
  const Abp a = MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 0}, {1, 2, 1}});
  const Abp b = MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 1}, {1, 2, 0}});
  try {
    SumRoabps(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderMismatch);
  }
  EXPECT_THROW(SumRoabps(TwoBranch(2, 0, 1), a), Error);
}

TEST(ConvertTest, Examples) {
  const Abp r = StrictIntervalToRoabp(TwoBranch(2, 0, 1));
  EXPECT_TRUE(CheckObliviousRoabp(r).report.ok);
  EXPECT_EQ(ExpandAbp(r), Poly(2, {{M({0, 1}), 2}}));
  const Abp id = RandomRoabpInOrder(Identity(6), 6, 3, 5);
  EXPECT_EQ(ExpandAbp(StrictIntervalToRoabp(id)), ExpandAbp(id));
  const Abp bad = MakeAbp(3, {{0}, {1}, {2}, {3}}, {{0, 1, 0}, {1, 2, 2}, {2, 3, 1}});
  try {
    StrictIntervalToRoabp(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidModel);
  }
}

void CheckConversion(const Abp& p) {
  const ConversionResult c = ConvertStrictInterval(p);
  ASSERT_TRUE(IsIdentityOrderRoabp(c.roabp));
  ASSERT_EQ(ExpandAbp(c.roabp), ExpandAbp(p));
  ASSERT_LE(c.roabp.size(), 2 * p.num_vars() * p.size());
}

TEST(ConvertProperty, StructuredCorpus) {
  SplitMix64 rng(89);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.Uniform(9));
    CheckConversion(RandomStrictIntervalAbp(n, 6 + static_cast<int>(rng.Uniform(55)), rng.Next()));
  }
}

TEST(ConvertProperty, FilteredWildCorpus) {
  SplitMix64 rng(97);
  int kept = 0, mixed = 0;
  for (int i = 0; i < 40000 && kept < 1000; ++i) {
    const Abp p = WildAbp(2 + static_cast<int>(rng.Uniform(4)), rng);
    if (!CheckStrictInterval(p).report.ok) continue;
    ++kept;
    const NodeClassification cls = ClassifyNodes(p);
    const bool asc = std::count(cls.tag.begin(), cls.tag.end(), NodeTag::kAscending) > 0;
    const bool desc = std::count(cls.tag.begin(), cls.tag.end(), NodeTag::kDescending) > 0;
    mixed += asc && desc;
    CheckConversion(p);
  }
  EXPECT_GE(kept, 1000);
  // Enough instances have both kinds of node to exercise the split.
  EXPECT_GE(mixed, 50);
}

}  // namespace
}  // namespace boundread
