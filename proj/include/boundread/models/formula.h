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

#ifndef BOUNDREAD_MODELS_FORMULA_H_
#define BOUNDREAD_MODELS_FORMULA_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "boundread/core/field.h"
#include "boundread/core/multilinear.h"

namespace boundread {

enum class GateKind { kVariable, kConstant, kSum, kProduct };

// Immutable formula node. Children are owned by value, so a Gate is always a
// tree; copies are deep. Size, depth and the leaf variable set are cached at
// construction.
class Gate {
 public:
  static constexpr int kMaxVariableIndex = 63;

  static Gate Variable(int index);
  // `value` is a raw residue interpreted in the enclosing Formula's field.
  static Gate Constant(uint64_t value);
  // kInvalidModel on an empty child list.
  static Gate Sum(std::vector<Gate> children);
  static Gate Product(std::vector<Gate> children);

  GateKind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == GateKind::kVariable || kind_ == GateKind::kConstant; }
  bool is_variable() const { return kind_ == GateKind::kVariable; }
  bool is_constant() const { return kind_ == GateKind::kConstant; }
  bool is_sum() const { return kind_ == GateKind::kSum; }
  bool is_product() const { return kind_ == GateKind::kProduct; }
  int variable() const { return variable_; }
  uint64_t constant() const { return constant_; }
  const std::vector<Gate>& children() const { return children_; }

  // Number of nodes in the subtree.
  size_t size() const { return size_; }
  // Longest root-to-leaf path, in edges; a leaf has depth 0.
  int depth() const { return depth_; }
  // var(g): variables labelling leaves below this gate.
  VarMask vars() const { return vars_; }

  std::string ToInfix() const;

  friend bool operator==(const Gate& a, const Gate& b);

 private:
  Gate() = default;
  static Gate Internal(GateKind kind, std::vector<Gate> children);

  GateKind kind_ = GateKind::kConstant;
  int variable_ = -1;
  uint64_t constant_ = 0;
  std::vector<Gate> children_;
  size_t size_ = 1;
  int depth_ = 0;
  VarMask vars_ = 0;
};

// A formula over x_0..x_{n-1} with constants in `field`.
class Formula {
 public:
  static constexpr int kMaxVars = 64;

  // kInvalidModel if a leaf variable is >= n or a constant is not reduced.
  Formula(int n, const Field& field, Gate root);

  int num_vars() const { return n_; }
  const Field& field() const { return field_; }
  const Gate& root() const { return root_; }
  size_t size() const { return root_.size(); }
  int depth() const { return root_.depth(); }

  // Same ambient n and field, different root.
  Formula WithRoot(Gate root) const { return Formula(n_, field_, std::move(root)); }

 private:
  int n_;
  Field field_;
  Gate root_;
};

// Preorder walk; `id` is the preorder index used in witnesses.
void VisitPreorder(const Gate& root,
                   const std::function<void(const Gate& gate, size_t id)>& visit);
// Gate reached by following child indices from the root.
const Gate& GateAtPath(const Gate& root, std::span<const size_t> path);
// Copy of `root` with the gate at `path` replaced.
Gate ReplaceAtPath(const Gate& root, std::span<const size_t> path, Gate replacement);

// Exact expansion; kNonMultilinear if a product merges overlapping monomials,
// kCapExceeded if n exceeds the dense cap.
MultilinearPoly ExpandFormula(const Formula& formula);
uint64_t EvaluateFormula(const Formula& formula, std::span<const uint64_t> point);

// Left-combed binary form: k-ary gates become k-1 nested binary gates and
// unary gates are dropped. Product factors are first ordered by the lowest
// variable they read, so an interval formula stays an interval formula.
Formula Binarize(const Formula& formula);
bool IsBinary(const Gate& gate);
// Constant folding: removes additive zeros and multiplicative ones, collapses
// products with a zero factor and single-child gates. Never adds nodes.
Formula Simplify(const Formula& formula);

}  // namespace boundread

#endif  // BOUNDREAD_MODELS_FORMULA_H_
