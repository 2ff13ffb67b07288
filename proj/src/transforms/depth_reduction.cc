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

#include "boundread/transforms/depth_reduction.h"

#include <utility>

#include "boundread/core/error.h"
#include "boundread/models/validators.h"

namespace boundread {
namespace {

bool SiblingGoesLeft(const Span& sibling, const Span& g) {
  return g.empty() || sibling.empty() || sibling.hi < g.lo;
}

Formula Normalize(const Formula& f) { return Binarize(Simplify(f)); }

bool IsConstant(const Gate& g, uint64_t v) { return g.is_constant() && g.constant() == v; }

Gate Reduce(const Formula& f);

Gate ReduceProduct(const Formula& ambient, std::vector<Gate> factors) {
  if (factors.empty()) return Gate::Constant(1);
  Gate root = factors.size() == 1 ? std::move(factors.front())
                                  : Gate::Product(std::move(factors));
  return Reduce(Normalize(ambient.WithRoot(std::move(root))));
}

Gate Reduce(const Formula& f) {
  if (f.size() <= 3) return f.root();
  const SeparatorDecomposition d = DecomposeAtSeparator(f, FindTreeSeparator(f));
  std::vector<Gate> factors;
  bool zero = false;
  for (Gate part : {ReduceProduct(f, d.left), ReduceProduct(f, d.right),
                    Reduce(Normalize(f.WithRoot(d.g)))}) {
    if (IsConstant(part, 0)) zero = true;
    if (!IsConstant(part, 1)) factors.push_back(std::move(part));
  }
  std::vector<Gate> terms;
  if (!zero) {
    if (factors.empty()) terms.push_back(Gate::Constant(1));
    else if (factors.size() == 1) terms.push_back(std::move(factors.front()));
    else terms.push_back(Gate::Product(std::move(factors)));
  }
  Gate rest = Reduce(Normalize(d.rest));
  if (!IsConstant(rest, 0)) terms.push_back(std::move(rest));
  if (terms.empty()) return Gate::Constant(0);
  if (terms.size() == 1) return std::move(terms.front());
  return Gate::Sum(std::move(terms));
}

}  // namespace

std::vector<size_t> FindTreeSeparator(const Formula& binary) {
  const size_t s = binary.size();
  if (s < 3) throw Error(ErrorCode::kInvalidArgument, "separator needs at least 3 nodes");
  if (!IsBinary(binary.root()))
    throw Error(ErrorCode::kInvalidArgument, "separator needs a binary formula");
  std::vector<size_t> path;
  const Gate* g = &binary.root();
  while (3 * g->size() > 2 * s) {
    const auto& kids = g->children();
    const size_t next = kids[1].size() > kids[0].size() ? 1 : 0;
    path.push_back(next);
    g = &kids[next];
  }
  return path;
}

SeparatorDecomposition DecomposeAtSeparator(const Formula& binary,
                                            const std::vector<size_t>& path) {
  const Gate& g = GateAtPath(binary.root(), path);
  const Span g_span = GateSpan(g);
  std::vector<Gate> left, right;
  const Gate* at = &binary.root();
  for (size_t step : path) {
    if (at->is_product()) {
      for (size_t c = 0; c < at->children().size(); ++c) {
        if (c == step) continue;
        const Gate& sib = at->children()[c];
        (SiblingGoesLeft(GateSpan(sib), g_span) ? left : right).push_back(sib);
      }
    }
    at = &at->children()[step];
  }
  Formula rest = Simplify(binary.WithRoot(ReplaceAtPath(binary.root(), path, Gate::Constant(0))));
  return {path, g, std::move(left), std::move(right), std::move(rest)};
}

Formula DepthReduceInterval(const Formula& formula) {
  const StructReport check = CheckIntervalFormula(formula);
  if (!check.ok) throw Error(ErrorCode::kInvalidModel, "not an interval formula: " + check.witness);
  return Simplify(formula.WithRoot(Reduce(Normalize(formula))));
}

}  // namespace boundread
