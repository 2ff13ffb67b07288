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

#ifndef BOUNDREAD_CORE_MULTILINEAR_H_
#define BOUNDREAD_CORE_MULTILINEAR_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boundread/core/field.h"

namespace boundread {

// Subset of variable indices as a bitmask; bit i stands for x_i.
using VarMask = uint64_t;

// Dense-keyed multilinear polynomial: a sorted list of (monomial mask,
// nonzero coefficient). Masks are subsets of {0, ..., n-1}.
class MultilinearPoly {
 public:
  static constexpr int kMaxVars = 24;

  struct Term {
    VarMask mask;
    uint64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  // The zero polynomial in n variables.
  MultilinearPoly(int n, const Field& field);

  static MultilinearPoly Constant(int n, const Field& field, uint64_t c);
  static MultilinearPoly Monomial(int n, const Field& field, VarMask mask, uint64_t c = 1);
  static MultilinearPoly Variable(int n, const Field& field, int index, uint64_t c = 1) {
    return Monomial(n, field, VarMask{1} << index, c);
  }
  // Builds from arbitrary (mask, coeff) pairs: duplicates are summed, zero
  // results dropped, masks validated against n.
  static MultilinearPoly FromTerms(int n, const Field& field,
                                   std::span<const Term> terms);

  int num_vars() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coeff(VarMask mask) const;
  // Union of the masks of all nonzero monomials.
  VarMask support() const;
  int degree() const;

  MultilinearPoly Scaled(uint64_t c) const;
  // Multiplies by c * x_index; kNonMultilinear if some monomial already has it.
  MultilinearPoly TimesVariable(int index, uint64_t c) const;
  // Restriction x_i := 0 for every i in `zeroed`.
  MultilinearPoly RestrictZero(VarMask zeroed) const;

  std::string ToString() const;

  friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  MultilinearPoly(int n, const Field& field, std::vector<Term> sorted_terms)
      : n_(n), field_(field), terms_(std::move(sorted_terms)) {}

  friend MultilinearPoly Add(const MultilinearPoly& f, const MultilinearPoly& g);
  friend MultilinearPoly Multiply(const MultilinearPoly& f, const MultilinearPoly& g);

  int n_;
  Field field_;
  std::vector<Term> terms_;
};

// kDimensionMismatch / kModulusMismatch on incompatible operands.
MultilinearPoly Add(const MultilinearPoly& f, const MultilinearPoly& g);
MultilinearPoly Subtract(const MultilinearPoly& f, const MultilinearPoly& g);
// Product of variable-disjoint operands; kOverlappingSupports otherwise.
MultilinearPoly Multiply(const MultilinearPoly& f, const MultilinearPoly& g);
// kDimensionMismatch unless point.size() == n; kModulusMismatch on foreign
// elements.
FieldElem Evaluate(const MultilinearPoly& f, std::span<const FieldElem> point);
uint64_t EvaluateRaw(const MultilinearPoly& f, std::span<const uint64_t> point);

// Accumulates terms in a hash map; cheaper than repeated Add when summing
// many small contributions.
class PolyAccumulator {
 public:
  PolyAccumulator(int n, const Field& field);

  void AddTerm(VarMask mask, uint64_t coeff);
  void AddPoly(const MultilinearPoly& f, uint64_t scale = 1);
  MultilinearPoly Build() const;

 private:
  int n_;
  Field field_;
  std::unordered_map<VarMask, uint64_t> acc_;
};

}  // namespace boundread

#endif  // BOUNDREAD_CORE_MULTILINEAR_H_
