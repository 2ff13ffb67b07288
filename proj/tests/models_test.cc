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

#include "boundread/core/error.h"
#include "boundread/hardpoly/random_models.h"
#include "boundread/hardpoly/ry.h"
#include "boundread/models/abp.h"
#include "boundread/models/census.h"
#include "boundread/models/formula.h"
#include "boundread/models/model_json.h"
#include "boundread/models/validators.h"
#include "test_util.h"

namespace boundread {
namespace {

using namespace testing;  // NOLINT

Formula F(int n, Gate root) { return Formula(n, Field(), std::move(root)); }

TEST(FormulaTest, ExpandExamples) {
  EXPECT_EQ(ExpandFormula(F(3, P({S({X(0), X(1)}), X(2)}))),
            Poly(3, {{M({0, 2}), 1}, {M({1, 2}), 1}}));
  EXPECT_EQ(ExpandFormula(F(1, X(0))), Poly(1, {{M({0}), 1}}));
  EXPECT_EQ(ExpandFormula(F(5, P({X(0), S({X(1), P({X(2), S({X(3), X(4)})})})}))),
            Poly(5, {{M({0, 1}), 1}, {M({0, 2, 3}), 1}, {M({0, 2, 4}), 1}}));
  try {
    ExpandFormula(F(2, P({X(0), S({X(0), X(1)})})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMultilinear);
  }
}

TEST(FormulaTest, StructureMetadata) {
  const Gate g = P({X(0), S({X(1), P({X(2), S({X(3), X(4)})})})});
  EXPECT_EQ(g.size(), 9u);
  EXPECT_EQ(g.depth(), 4);
  EXPECT_EQ(g.vars(), M({0, 1, 2, 3, 4}));
  EXPECT_EQ(g.ToInfix(), "(x0*(x1+(x2*(x3+x4))))");
  EXPECT_THROW(Gate::Sum({}), Error);
  EXPECT_THROW(F(2, X(2)), Error);
  EXPECT_THROW(Formula(2, Field(7), C(9)), Error);
}

TEST(FormulaTest, BinarizeAndSimplifyPreserveSemantics) {
  const Formula f = F(4, S({P({C(2), X(0), X(1)}), X(2), P({C(0), X(3)}), S({C(1)})}));
  const Formula b = Binarize(f);
  EXPECT_TRUE(IsBinary(b.root()));
  EXPECT_EQ(ExpandFormula(b), ExpandFormula(f));
  const Formula s = Simplify(f);
  EXPECT_EQ(ExpandFormula(s), ExpandFormula(f));
  EXPECT_EQ(s.root().ToInfix(), "(1+(2*x0*x1)+x2)");
}

TEST(FormulaTest, PathHelpers) {
  const Gate g = P({X(0), S({X(1), X(2)})});
  const size_t path[] = {1, 0};
  EXPECT_EQ(GateAtPath(g, path), X(1));
  EXPECT_EQ(ReplaceAtPath(g, path, C(5)).ToInfix(), "(x0*(5+x2))");
  std::vector<size_t> ids;
  VisitPreorder(g, [&](const Gate&, size_t id) { ids.push_back(id); });
  EXPECT_EQ(ids, (std::vector<size_t>{0, 1, 2, 3, 4}));
}

TEST(AbpTest, ExpandExamples) {
  EXPECT_EQ(ExpandAbp(MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 0}, {1, 2, 1}})),
            Poly(2, {{M({0, 1}), 1}}));
  EXPECT_EQ(ExpandAbp(TwoBranch(2, 0, 1)), Poly(2, {{M({0, 1}), 2}}));
  try {
    ExpandAbp(MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 0}, {1, 2, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMultilinear);
  }
}

TEST(AbpTest, StructuralErrors) {
  EXPECT_THROW(MakeAbp(2, {{0, 1}, {2}}, {}), Error);
  EXPECT_THROW(MakeAbp(2, {{0}, {1}, {2}}, {{0, 2, 0}}), Error);
  EXPECT_THROW(MakeAbp(2, {{0}, {1}}, {{0, 1, 5}}), Error);
  EXPECT_THROW(MakeAbp(2, {{0}, {0}}, {}), Error);
  // Zero edges vanish.
  EXPECT_EQ(MakeAbp(1, {{0}, {1}}, {{0, 1, 0, 0}}).edges().size(), 0u);
}

TEST(AbpTest, PruneDropsDeadNodes) {
  const Abp p = MakeAbp(3, {{0}, {1, 2, 3}, {4}},
                        {{0, 1, 0}, {1, 4, 1}, {0, 2, 2}, {3, 4, 2}});
  const Abp q = Prune(p);
  EXPECT_EQ(q.num_nodes(), 3);
  EXPECT_EQ(ExpandAbp(q), ExpandAbp(p));
  const Abp dead = Prune(MakeAbp(1, {{0}, {1}, {2}}, {{0, 1, 0}}));
  EXPECT_EQ(dead.num_nodes(), 2);
  EXPECT_TRUE(ExpandAbp(dead).is_zero());
}

TEST(AbpTest, GlueAndScale) {
  const Abp a = MakeAbp(3, {{0}, {1}, {2}, {3}}, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});
  const Abp b = MakeAbp(3, {{0}, {1}}, {{0, 1, 1, 4}});
  const Abp g = GlueParallel(a, b);
  EXPECT_EQ(ExpandAbp(g), Add(ExpandAbp(a), ExpandAbp(b)));
  EXPECT_EQ(ExpandAbp(GlueParallel(b, a)), ExpandAbp(g));
  EXPECT_EQ(ExpandAbp(ScaleAbp(a, 3)), ExpandAbp(a).Scaled(3));
}

TEST(ModelsProperty, ExpansionMatchesEvaluation) {
  const Field f;
  SplitMix64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.Uniform(9));
    const Formula rof = RandomRof(n, rng.Next());
    const Formula iv = RandomIntervalFormula(n, 5 + static_cast<int>(rng.Uniform(40)), rng.Next());
    const Abp ro = RandomRoabp(n, 1 + static_cast<int>(rng.Uniform(4)), rng.Next());
    const Abp si = RandomStrictIntervalAbp(n, 6 + static_cast<int>(rng.Uniform(20)), rng.Next());
    const auto e_rof = ExpandFormula(rof), e_iv = ExpandFormula(iv);
    const auto e_ro = ExpandAbp(ro), e_si = ExpandAbp(si);
    for (int k = 0; k < 100; ++k) {
      const auto pt = RandomPoint(n, rng);
      ASSERT_EQ(EvaluateRaw(e_rof, pt), EvaluateFormula(rof, pt));
      ASSERT_EQ(EvaluateRaw(e_iv, pt), EvaluateFormula(iv, pt));
      ASSERT_EQ(EvaluateRaw(e_ro, pt), EvaluateAbp(ro, pt));
      ASSERT_EQ(EvaluateRaw(e_si, pt), EvaluateAbp(si, pt));
    }
  }
}

TEST(ValidatorTest, SyntacticMultilinear) {
  EXPECT_TRUE(CheckSyntacticMultilinear(F(2, P({X(0), X(1)}))).ok);
  const StructReport bad = CheckSyntacticMultilinear(F(2, P({X(0), S({X(0), X(1)})})));
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.witness.find("gate #0"), std::string::npos);
  EXPECT_TRUE(CheckSyntacticMultilinear(TwoBranch(2, 0, 1)).ok);
  const StructReport abp_bad =
      CheckSyntacticMultilinear(MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 0}, {1, 2, 0}}));
  EXPECT_FALSE(abp_bad.ok);
  EXPECT_FALSE(abp_bad.witness.empty());
}

TEST(ValidatorTest, ReadOnceAndReadK) {
  const Formula rof = F(4, P({S({C(1), P({X(0), X(1)})}), S({C(1), P({X(2), X(3)})})}));
  EXPECT_TRUE(CheckRof(rof).ok);
  EXPECT_EQ(ReadK(rof), 1);
  const Formula sop = F(3, S({P({X(0), X(1)}), P({X(1), X(2)}), P({X(0), X(2)})}));
  EXPECT_FALSE(CheckRof(sop).ok);
  EXPECT_EQ(ReadK(sop), 2);
  const WAssignment w = WAssignment::Random(std::vector<int>{0, 1, 2, 3}, Field(), 4);
  const Formula ry = F(4, SopGate(GenerateRy(4, Field(), std::vector<int>{0, 1, 2, 3}, w)));
  EXPECT_EQ(ReadK(ry), 3);
  EXPECT_EQ(ReadCounts(ry), (std::vector<int>{3, 3, 3, 3}));
}

TEST(ValidatorTest, ObliviousRoabp) {
  const RoabpCheck ok = CheckObliviousRoabp(MakeAbp(2, {{0}, {1}, {2}}, {{0, 1, 0}, {1, 2, 1}}));
  EXPECT_TRUE(ok.report.ok);
  EXPECT_EQ(ok.order, (std::vector<int>{0, 1}));
  EXPECT_FALSE(CheckObliviousRoabp(TwoBranch(2, 0, 1)).report.ok);
  const RoabpCheck twice =
      CheckObliviousRoabp(MakeAbp(2, {{0}, {1}, {2}, {3}}, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}}));
  EXPECT_FALSE(twice.report.ok);
  EXPECT_TRUE(twice.order.empty());
  // Constant-only layers are skipped in the order.
  const RoabpCheck gap =
      CheckObliviousRoabp(MakeAbp(3, {{0}, {1}, {2}, {3}}, {{0, 1, 2}, {1, 2, -1, 5}, {2, 3, 0}}));
  EXPECT_EQ(gap.order, (std::vector<int>{2, 0}));
}

TEST(ValidatorTest, StrictInterval) {
  EXPECT_TRUE(CheckStrictInterval(TwoBranch(2, 0, 1)).report.ok);
  const IntervalCheck bad = CheckStrictInterval(
      MakeAbp(3, {{0}, {1}, {2}, {3}}, {{0, 1, 0}, {1, 2, 2}, {2, 3, 1}}));
  EXPECT_FALSE(bad.report.ok);
  EXPECT_NE(bad.report.witness.find("(u,v,w)"), std::string::npos);
  SplitMix64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + static_cast<int>(rng.Uniform(8));
    std::vector<int> id(n);
    for (int k = 0; k < n; ++k) id[k] = k;
    EXPECT_TRUE(CheckStrictInterval(RandomRoabpInOrder(id, n, 3, rng.Next())).report.ok);
  }
}

TEST(ValidatorTest, StrictIntervalPairVars) {
  const IntervalCheck c = CheckStrictInterval(TwoBranch(2, 0, 1));
  EXPECT_EQ(c.pairs.vars[0][3], M({0, 1}));
  EXPECT_EQ(c.pairs.vars[0][1], M({0}));
  EXPECT_EQ(c.pairs.vars[2][3], M({0}));
  EXPECT_FALSE(c.pairs.reach[1][2]);
}

TEST(ValidatorTest, IntervalFormula) {
  EXPECT_TRUE(CheckIntervalFormula(F(3, S({P({X(0), X(1)}), P({X(1), X(2)}), P({X(0), X(2)})}))).ok);
  EXPECT_FALSE(CheckIntervalFormula(F(3, P({X(1), S({X(0), X(2)})}))).ok);
  EXPECT_TRUE(CheckIntervalFormula(F(4, P({S({X(0), X(1)}), P({X(2), X(3)})}))).ok);
  // Constants have an empty span.
  EXPECT_TRUE(CheckIntervalFormula(F(1, P({C(3), X(0)}))).ok);
}

TEST(ValidatorProperty, RofImpliesSyntacticMultilinear) {
  SplitMix64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Formula f = RandomRof(1 + static_cast<int>(rng.Uniform(20)), rng.Next());
    ASSERT_TRUE(CheckRof(f).ok);
    ASSERT_TRUE(CheckSyntacticMultilinear(f).ok);
  }
}

TEST(ValidatorProperty, RoabpRelabelledToReadOrderIsStrictInterval) {
  SplitMix64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng.Uniform(7));
    const Abp p = RandomRoabp(n, 3, rng.Next());
    const RoabpCheck check = CheckObliviousRoabp(p);
    ASSERT_TRUE(check.report.ok);
    std::vector<int> rank_of(n, -1);
    for (size_t k = 0; k < check.order.size(); ++k) rank_of[check.order[k]] = static_cast<int>(k);
    std::vector<AbpEdge> edges = p.edges();
    for (AbpEdge& e : edges) {
      if (!e.is_constant()) e.var = rank_of[e.var];
    }
    ASSERT_TRUE(CheckStrictInterval(Abp(n, p.field(), p.layers(), edges)).report.ok);
  }
}

TEST(CensusTest, Examples) {
  const Formula f = F(4, P({S({X(0), X(1)}), P({X(2), X(3)})}));
  const GateCensus c = TakeGateCensus(f, Partition::FromY(4, std::vector<int>{0, 2}));
  EXPECT_EQ(c, (GateCensus{1, 1, 0, 0, 0, 1}));
  const GateCensus same = TakeGateCensus(F(2, S({X(0), X(1)})), Partition(2, 0b11));
  EXPECT_EQ(same.a, 1);
  EXPECT_EQ(same.a_one, 1);
  const GateCensus d = TakeGateCensus(F(6, P({S({X(0), X(1)}), X(5)})), Partition(6, 0b111));
  EXPECT_EQ(d.d, 1);
  EXPECT_THROW(TakeGateCensus(F(3, S({X(0), X(1), X(2)})), Partition(3, 1)), Error);
}

TEST(CensusProperty, TotalsBoundedByInternalGates) {
  SplitMix64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + 2 * static_cast<int>(rng.Uniform(8));
    const Formula f = RandomRof(n, rng.Next());
    const GateCensus c = TakeGateCensus(f, Partition(n, rng.Uniform(VarMask{1} << n)));
    int internal = 0;
    VisitPreorder(f.root(), [&](const Gate& g, size_t) { internal += g.is_leaf() ? 0 : 1; });
    EXPECT_LE(c.a + c.b + c.c + c.d, internal);
    EXPECT_EQ(c.a, c.a_one + c.a_two);
  }
}

TEST(ModelJsonTest, RoundTrip) {
  SplitMix64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const Formula f = RandomIntervalFormula(6, 21, rng.Next());
    const Formula g = FormulaFromJson(FormulaToJson(f));
    EXPECT_EQ(g.root(), f.root());
    const Abp a = RandomStrictIntervalAbp(6, 15, rng.Next());
    const Abp b = AbpFromJson(AbpToJson(a));
    EXPECT_EQ(AbpToJson(b), AbpToJson(a));
    EXPECT_EQ(ExpandAbp(b), ExpandAbp(a));
  }
}

TEST(ModelJsonTest, ParsesHandWrittenModels) {
  const auto j = nlohmann::json::parse(R"({"n":3,"root":["*",{"x":0},["+",{"x":1},{"c":-1}]]})");
  const Model m = ModelFromJson(j);
  ASSERT_TRUE(std::holds_alternative<Formula>(m));
  EXPECT_EQ(ExpandFormula(std::get<Formula>(m)),
            Poly(3, {{M({0, 1}), 1}, {M({0}), Field().Neg(1)}}));
  const auto a = nlohmann::json::parse(
      R"({"n":2,"layers":[[0],[1],[2]],"edges":[{"from":0,"to":1,"var":0,"coeff":1},{"from":1,"to":2,"coeff":3}]})");
  const Model ma = ModelFromJson(a);
  ASSERT_TRUE(std::holds_alternative<Abp>(ma));
  EXPECT_EQ(ExpandAbp(std::get<Abp>(ma)), Poly(2, {{M({0}), 3}}));
  try {
    ModelFromJson(nlohmann::json::parse(R"({"n":2,"root":["-",{"x":0}]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

}  // namespace
}  // namespace boundread
