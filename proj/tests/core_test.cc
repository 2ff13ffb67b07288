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

#include <vector>

#include "boundread/core/error.h"
#include "boundread/core/field.h"
#include "boundread/core/multilinear.h"
#include "boundread/core/poly_json.h"
#include "boundread/core/rng.h"
#include "test_util.h"

namespace boundread {
namespace {

using testing::M;
using testing::Poly;

TEST(FieldTest, SmallPrimeArithmetic) {
  const FieldElem three(3, 7), five(5, 7), one(1, 7);
  EXPECT_EQ((three + five).value(), 1u);
  EXPECT_EQ((three * five).value(), 1u);
  EXPECT_EQ((one / three).value(), 5u);
  EXPECT_EQ((three - five).value(), 5u);
  EXPECT_EQ(Arith(three, five, ArithOp::kMul).value(), 1u);
}

TEST(FieldTest, Errors) {
  const FieldElem a(3, 7), b(3, 11), zero(0, 7);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModulusMismatch);
  }
  try {
    (void)(a / zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  EXPECT_THROW(Field(15), Error);
  EXPECT_THROW(Field(1), Error);
  EXPECT_NO_THROW(Field((uint64_t{1} << 61) - 1));
  EXPECT_THROW(Field(uint64_t{1} << 62), Error);
}

TEST(FieldTest, PrimalityOracle) {
  std::vector<uint64_t> small;
  for (uint64_t p = 2; p < 200; ++p) {
    bool prime = true;
    for (uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    EXPECT_EQ(IsPrime(p), prime) << p;
  }
  EXPECT_TRUE(IsPrime(1000000007));
  EXPECT_TRUE(IsPrime(998244353));
  EXPECT_FALSE(IsPrime(uint64_t{1000000007} * 998244353));
  EXPECT_FALSE(IsPrime(3215031751));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(FieldTest, RandomLaws) {
  const Field f;
  SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const uint64_t a = rng.FieldValue(f), b = rng.FieldValue(f), c = rng.FieldValue(f);
    EXPECT_EQ(f.Add(a, b), f.Add(b, a));
    EXPECT_EQ(f.Mul(a, b), f.Mul(b, a));
    EXPECT_EQ(f.Add(f.Add(a, b), c), f.Add(a, f.Add(b, c)));
    EXPECT_EQ(f.Mul(f.Mul(a, b), c), f.Mul(a, f.Mul(b, c)));
    EXPECT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)));
    if (b != 0) EXPECT_EQ(f.Div(f.Mul(a, b), b), a);
    EXPECT_EQ(f.Add(a, f.Neg(a)), 0u);
  }
}

TEST(FieldTest, LargeModulus) {
  const Field f((uint64_t{1} << 61) - 1);
  SplitMix64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const uint64_t a = rng.NonZeroFieldValue(f);
    EXPECT_EQ(f.Mul(a, f.Inv(a)), 1u);
  }
}

TEST(RngTest, SplitMixReferenceVectors) {
  SplitMix64 rng(1234567);
  const uint64_t expected[] = {6457827717110365317ULL, 3203168211198807973ULL,
                               9817491932198370423ULL, 4593380528125082431ULL,
                               16408922859458223821ULL};
  for (uint64_t e : expected) EXPECT_EQ(rng.Next(), e);
  EXPECT_EQ(SplitMix64(0).Next(), 0xe220a8397b1dcdafULL);
}

TEST(RngTest, UniformVector) {
  SplitMix64 rng(2024);
  const uint64_t expected[] = {1, 2, 1, 5, 8, 9, 1, 4};
  for (uint64_t e : expected) EXPECT_EQ(rng.Uniform(10), e);
  EXPECT_THROW(rng.Uniform(0), Error);
  EXPECT_EQ(DeriveSeed(0b1010, 0b0110), 0b1100u);
}

TEST(MultilinearTest, AddExamples) {
  const int n = 2;
  const auto one_plus_x = Poly(n, {{0, 1}, {M({0}), 1}});
  const auto x = Poly(n, {{M({0}), 1}});
  EXPECT_EQ(Add(one_plus_x, x), Poly(n, {{0, 1}, {M({0}), 2}}));
  EXPECT_EQ(Add(one_plus_x, MultilinearPoly(n, Field())), one_plus_x);
  const auto sum = Add(one_plus_x, x.Scaled(Field().Neg(1)));
  EXPECT_EQ(sum, MultilinearPoly::Constant(n, Field(), 1));
  EXPECT_EQ(sum.num_terms(), 1u);
}

TEST(MultilinearTest, MulExamples) {
  const int n = 4;
  EXPECT_EQ(Multiply(Poly(n, {{0, 1}, {M({0}), 1}}), Poly(n, {{M({1}), 1}})),
            Poly(n, {{M({1}), 1}, {M({0, 1}), 1}}));
  EXPECT_EQ(Multiply(Poly(n, {{0, 1}, {M({0, 1}), 1}}), Poly(n, {{0, 1}, {M({2, 3}), 1}})),
            Poly(n, {{0, 1}, {M({0, 1}), 1}, {M({2, 3}), 1}, {M({0, 1, 2, 3}), 1}}));
  try {
    Multiply(Poly(n, {{M({0}), 1}}), Poly(n, {{M({0}), 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverlappingSupports);
  }
}

TEST(MultilinearTest, EvalExamples) {
  const Field f7(7);
  const auto f = Poly(3, {{M({0, 2}), 1}, {M({1}), 1}}, f7);
  const uint64_t pt[] = {2, 3, 5};
  EXPECT_EQ(EvaluateRaw(f, pt), 6u);
  EXPECT_EQ(EvaluateRaw(Poly(2, {{0, 1}, {M({0, 1}), 1}}), std::vector<uint64_t>{1, 1}), 2u);
  EXPECT_EQ(EvaluateRaw(Poly(2, {{M({0}), 1}}), std::vector<uint64_t>{0, 9}), 0u);
  EXPECT_THROW(EvaluateRaw(f, std::vector<uint64_t>{1, 2}), Error);
}

TEST(MultilinearTest, MismatchErrors) {
  const auto a = MultilinearPoly::Variable(3, Field(), 0);
  const auto b = MultilinearPoly::Variable(4, Field(), 0);
  const auto c = MultilinearPoly::Variable(3, Field(7), 0);
  try {
    Add(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    Add(a, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModulusMismatch);
  }
  EXPECT_THROW(MultilinearPoly(25, Field()), Error);
  EXPECT_THROW(MultilinearPoly::Monomial(3, Field(), M({3})), Error);
}

TEST(MultilinearTest, EvaluationIsHomomorphic) {
  const Field f;
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.Uniform(10));
    const auto g = testing::RandomPoly(n, 1 + static_cast<int>(rng.Uniform(20)), rng);
    const auto h = testing::RandomPoly(n, 1 + static_cast<int>(rng.Uniform(20)), rng);
    const auto pt = testing::RandomPoint(n, rng);
    EXPECT_EQ(EvaluateRaw(Add(g, h), pt), f.Add(EvaluateRaw(g, pt), EvaluateRaw(h, pt)));
    EXPECT_EQ(EvaluateRaw(Subtract(g, h), pt), f.Sub(EvaluateRaw(g, pt), EvaluateRaw(h, pt)));
    // Split the variables to get disjoint supports.
    const VarMask left = rng.Uniform(VarMask{1} << n);
    const VarMask all = (VarMask{1} << n) - 1;
    const auto p = testing::RandomPolyOn(n, left, 8, rng);
    const auto q = testing::RandomPolyOn(n, all & ~left, 8, rng);
    const auto pq = Multiply(p, q);
    EXPECT_EQ(EvaluateRaw(pq, pt), f.Mul(EvaluateRaw(p, pt), EvaluateRaw(q, pt)));
    EXPECT_LE(pq.num_terms(), p.num_terms() * q.num_terms());
  }
}

TEST(MultilinearTest, TimesVariableAndRestrict) {
  const auto f = Poly(3, {{0, 2}, {M({1}), 3}});
  EXPECT_EQ(f.TimesVariable(0, 5), Poly(3, {{M({0}), 10}, {M({0, 1}), 15}}));
  EXPECT_THROW(f.TimesVariable(1, 1), Error);
  EXPECT_EQ(f.RestrictZero(M({1})), Poly(3, {{0, 2}}));
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.support(), M({1}));
}

TEST(PolyJsonTest, RoundTripAndCanonicalOrder) {
  SplitMix64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto f = testing::RandomPoly(6, 10, rng);
    const auto j = PolyToJson(f);
    EXPECT_EQ(PolyFromJson(j), f);
    for (size_t k = 1; k < j["terms"].size(); ++k) {
      EXPECT_LT(j["terms"][k - 1]["mask"].get<uint64_t>(), j["terms"][k]["mask"].get<uint64_t>());
    }
  }
}

TEST(PolyJsonTest, SignedCoefficientsAndErrors) {
  const auto f = PolyFromJson(nlohmann::json::parse(R"({"n":2,"p":7,"terms":[{"mask":1,"coeff":-1}]})"));
  EXPECT_EQ(f.coeff(1).value(), 6u);
  try {
    PolyFromJson(nlohmann::json::parse(R"({"terms":[]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

}  // namespace
}  // namespace boundread
