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

#include "boundread/models/census.h"

#include "boundread/core/error.h"
#include "boundread/rank/pd_matrix.h"

namespace boundread {
namespace {

// Rank of x_i + x_j under phi, via the partial derivative matrix of the
// two-variable (or one-variable, when i == j) polynomial.
int SumOfVariablesRank(int i, int j, const Partition& phi, const Field& field) {
  if (i == j) {
    return RankOf(MultilinearPoly::Variable(1, field, 0, 2), Partition(1, phi.in_y(i) ? 1 : 0));
  }
  const MultilinearPoly f = Add(MultilinearPoly::Variable(2, field, 0),
                                MultilinearPoly::Variable(2, field, 1));
  const VarMask y = (phi.in_y(i) ? 1 : 0) | (phi.in_y(j) ? 2 : 0);
  return RankOf(f, Partition(2, y));
}

}  // namespace

GateCensus TakeGateCensus(const Formula& formula, const Partition& phi) {
  if (!IsBinary(formula.root())) {
    throw Error(ErrorCode::kInvalidModel, "gate census needs a binary formula");
  }
  if (phi.num_vars() != formula.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch, "partition and formula over different n");
  }
  GateCensus census;
  VisitPreorder(formula.root(), [&](const Gate& g, size_t) {
    if (g.is_leaf()) return;
    const Gate& l = g.children()[0];
    const Gate& r = g.children()[1];
    const int vars = (l.is_variable() ? 1 : 0) + (r.is_variable() ? 1 : 0);
    if (vars == 2 && g.is_sum()) {
      ++census.a;
      if (SumOfVariablesRank(l.variable(), r.variable(), phi, formula.field()) == 2) {
        ++census.a_two;
      } else {
        ++census.a_one;
      }
    } else if (vars == 2) {
      ++census.b;
    } else if (vars == 1 && g.is_sum()) {
      ++census.c;
    } else if (vars == 1) {
      ++census.d;
    }
  });
  return census;
}

double CensusLog2Bound(const GateCensus& c) {
  return c.a_two + 2.0 * c.a_one / 3.0 + 2.0 * c.b / 3.0 + 9.0 * c.c / 20.0;
}

}  // namespace boundread
