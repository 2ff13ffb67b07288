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

#include "boundread/models/formula.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "boundread/core/error.h"

namespace boundread {

Gate Gate::Variable(int index) {
  if (index < 0 || index > kMaxVariableIndex) {
    throw Error(ErrorCode::kInvalidModel, "variable index " + std::to_string(index));
  }
  Gate g;
  g.kind_ = GateKind::kVariable;
  g.variable_ = index;
  g.vars_ = VarMask{1} << index;
  return g;
}

Gate Gate::Constant(uint64_t value) {
  Gate g;
  g.kind_ = GateKind::kConstant;
  g.constant_ = value;
  return g;
}

Gate Gate::Internal(GateKind kind, std::vector<Gate> children) {
  if (children.empty()) {
    throw Error(ErrorCode::kInvalidModel, "internal gate without children");
  }
  Gate g;
  g.kind_ = kind;
  g.children_ = std::move(children);
  for (const Gate& c : g.children_) {
    g.size_ += c.size_;
    g.depth_ = std::max(g.depth_, c.depth_ + 1);
    g.vars_ |= c.vars_;
  }
  return g;
}

Gate Gate::Sum(std::vector<Gate> children) {
  return Internal(GateKind::kSum, std::move(children));
}

Gate Gate::Product(std::vector<Gate> children) {
  return Internal(GateKind::kProduct, std::move(children));
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind_ != b.kind_ || a.size_ != b.size_) return false;
  switch (a.kind_) {
    case GateKind::kVariable: return a.variable_ == b.variable_;
    case GateKind::kConstant: return a.constant_ == b.constant_;
    default: return a.children_ == b.children_;
  }
}

std::string Gate::ToInfix() const {
  switch (kind_) {
    case GateKind::kVariable: return "x" + std::to_string(variable_);
    case GateKind::kConstant: return std::to_string(constant_);
    default: break;
  }
  std::string out = "(";
  const char* op = is_sum() ? "+" : "*";
  for (size_t i = 0; i < children_.size(); ++i) {
    if (i > 0) out += op;
    out += children_[i].ToInfix();
  }
  return out + ")";
}

Formula::Formula(int n, const Field& field, Gate root)
    : n_(n), field_(field), root_(std::move(root)) {
  if (n < 0 || n > kMaxVars) {
    throw Error(ErrorCode::kInvalidModel, "formula over " + std::to_string(n) + " variables");
  }
  if (n < 64 && (root_.vars() >> n) != 0) {
    throw Error(ErrorCode::kInvalidModel,
                "leaf variable outside x0..x" + std::to_string(n - 1));
  }
  VisitPreorder(root_, [&](const Gate& g, size_t id) {
    if (g.is_constant() && g.constant() >= field_.modulus()) {
      throw Error(ErrorCode::kInvalidModel,
                  "constant at gate " + std::to_string(id) + " is not reduced");
    }
  });
}

namespace {

void Preorder(const Gate& g, size_t& next,
              const std::function<void(const Gate&, size_t)>& visit) {
  visit(g, next++);
  for (const Gate& c : g.children()) Preorder(c, next, visit);
}

MultilinearPoly ExpandGate(const Gate& g, int n, const Field& field) {
  switch (g.kind()) {
    case GateKind::kVariable: return MultilinearPoly::Variable(n, field, g.variable());
    case GateKind::kConstant: return MultilinearPoly::Constant(n, field, g.constant());
    case GateKind::kSum: {
      MultilinearPoly acc(n, field);
      for (const Gate& c : g.children()) acc = Add(acc, ExpandGate(c, n, field));
      return acc;
    }
    case GateKind::kProduct: {
      MultilinearPoly acc = MultilinearPoly::Constant(n, field, 1);
      for (const Gate& c : g.children()) {
        MultilinearPoly child = ExpandGate(c, n, field);
        if ((acc.support() & child.support()) != 0) {
          throw Error(ErrorCode::kNonMultilinear,
                      "product " + g.ToInfix() + " multiplies overlapping supports");
        }
        acc = Multiply(acc, child);
      }
      return acc;
    }
  }
  throw Error(ErrorCode::kInvalidModel, "unknown gate kind");
}

uint64_t EvaluateGate(const Gate& g, const Field& F, std::span<const uint64_t> point) {
  switch (g.kind()) {
    case GateKind::kVariable: return F.Reduce(point[g.variable()]);
    case GateKind::kConstant: return g.constant();
    case GateKind::kSum: {
      uint64_t acc = 0;
      for (const Gate& c : g.children()) acc = F.Add(acc, EvaluateGate(c, F, point));
      return acc;
    }
    case GateKind::kProduct: {
      uint64_t acc = 1;
      for (const Gate& c : g.children()) acc = F.Mul(acc, EvaluateGate(c, F, point));
      return acc;
    }
  }
  return 0;
}

Gate BinarizeGate(const Gate& g) {
  if (g.is_leaf()) return g;
  std::vector<Gate> kids;
  kids.reserve(g.children().size());
  for (const Gate& c : g.children()) kids.push_back(BinarizeGate(c));
  if (kids.size() == 1) return std::move(kids.front());
  if (g.is_product()) {
    // Ordering factors by span keeps the comb an interval formula: every
    // prefix hull ends before the next factor starts. Empty spans go first.
    std::stable_sort(kids.begin(), kids.end(), [](const Gate& a, const Gate& b) {
      const int la = a.vars() == 0 ? -1 : std::countr_zero(a.vars());
      const int lb = b.vars() == 0 ? -1 : std::countr_zero(b.vars());
      return la < lb;
    });
  }
  Gate acc = std::move(kids[0]);
  for (size_t i = 1; i < kids.size(); ++i) {
    std::vector<Gate> pair;
    pair.push_back(std::move(acc));
    pair.push_back(std::move(kids[i]));
    acc = g.is_sum() ? Gate::Sum(std::move(pair)) : Gate::Product(std::move(pair));
  }
  return acc;
}

Gate SimplifyGate(const Gate& g, const Field& F) {
  if (g.is_leaf()) return g;
  std::vector<Gate> kids;
  const bool sum = g.is_sum();
  uint64_t folded = sum ? 0 : 1;
  bool any_constant = false;
  for (const Gate& c : g.children()) {
    Gate s = SimplifyGate(c, F);
    if (s.is_constant()) {
      folded = sum ? F.Add(folded, s.constant()) : F.Mul(folded, s.constant());
      any_constant = true;
    } else {
      kids.push_back(std::move(s));
    }
  }
  if (!sum && any_constant && folded == 0) return Gate::Constant(0);
  const uint64_t neutral = sum ? 0 : 1;
  if (any_constant && folded != neutral) {
    // Keep the constant first so products stay scalar-times-rest.
    kids.insert(kids.begin(), Gate::Constant(folded));
  }
  if (kids.empty()) return Gate::Constant(any_constant ? folded : neutral);
  if (kids.size() == 1) return std::move(kids.front());
  return sum ? Gate::Sum(std::move(kids)) : Gate::Product(std::move(kids));
}

}  // namespace

void VisitPreorder(const Gate& root,
                   const std::function<void(const Gate& gate, size_t id)>& visit) {
  size_t next = 0;
  Preorder(root, next, visit);
}

const Gate& GateAtPath(const Gate& root, std::span<const size_t> path) {
  const Gate* g = &root;
  for (size_t idx : path) {
    if (idx >= g->children().size()) {
      throw Error(ErrorCode::kInvalidArgument, "gate path leaves the tree");
    }
    g = &g->children()[idx];
  }
  return *g;
}

Gate ReplaceAtPath(const Gate& root, std::span<const size_t> path, Gate replacement) {
  if (path.empty()) return replacement;
  if (path.front() >= root.children().size()) {
    throw Error(ErrorCode::kInvalidArgument, "gate path leaves the tree");
  }
  std::vector<Gate> kids = root.children();
  kids[path.front()] = ReplaceAtPath(kids[path.front()], path.subspan(1), std::move(replacement));
  return root.is_sum() ? Gate::Sum(std::move(kids)) : Gate::Product(std::move(kids));
}

MultilinearPoly ExpandFormula(const Formula& formula) {
  return ExpandGate(formula.root(), formula.num_vars(), formula.field());
}

uint64_t EvaluateFormula(const Formula& formula, std::span<const uint64_t> point) {
  if (point.size() != static_cast<size_t>(formula.num_vars())) {
    throw Error(ErrorCode::kDimensionMismatch, "evaluation point length");
  }
  return EvaluateGate(formula.root(), formula.field(), point);
}

Formula Binarize(const Formula& formula) {
  return formula.WithRoot(BinarizeGate(formula.root()));
}

bool IsBinary(const Gate& gate) {
  if (gate.is_leaf()) return true;
  if (gate.children().size() != 2) return false;
  return IsBinary(gate.children()[0]) && IsBinary(gate.children()[1]);
}

Formula Simplify(const Formula& formula) {
  return formula.WithRoot(SimplifyGate(formula.root(), formula.field()));
}

}  // namespace boundread
