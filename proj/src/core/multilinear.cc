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

#include "boundread/core/multilinear.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "boundread/core/error.h"

namespace boundread {
namespace {

void CheckVarCount(int n) {
  if (n < 0 || n > MultilinearPoly::kMaxVars) {
    throw Error(ErrorCode::kCapExceeded,
                "multilinear polynomials support 0.." +
                    std::to_string(MultilinearPoly::kMaxVars) + " variables, got " +
                    std::to_string(n));
  }
}

VarMask FullMask(int n) { return n >= 64 ? ~VarMask{0} : (VarMask{1} << n) - 1; }

void CheckCompatible(const MultilinearPoly& f, const MultilinearPoly& g) {
  if (f.field().modulus() != g.field().modulus()) {
    throw Error(ErrorCode::kModulusMismatch, "polynomials over different fields");
  }
  if (f.num_vars() != g.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(f.num_vars()) + " vs " + std::to_string(g.num_vars()) +
                    " variables");
  }
}

}  // namespace

MultilinearPoly::MultilinearPoly(int n, const Field& field) : n_(n), field_(field) {
  CheckVarCount(n);
}

MultilinearPoly MultilinearPoly::Constant(int n, const Field& field, uint64_t c) {
  return Monomial(n, field, 0, c);
}

MultilinearPoly MultilinearPoly::Monomial(int n, const Field& field, VarMask mask,
                                          uint64_t c) {
  Term t{mask, c};
  return FromTerms(n, field, std::span<const Term>(&t, 1));
}

MultilinearPoly MultilinearPoly::FromTerms(int n, const Field& field,
                                           std::span<const Term> terms) {
  CheckVarCount(n);
  std::vector<Term> sorted;
  sorted.reserve(terms.size());
  for (const Term& t : terms) {
    if ((t.mask & ~FullMask(n)) != 0) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "monomial mask " + std::to_string(t.mask) + " outside " +
                      std::to_string(n) + " variables");
    }
    sorted.push_back({t.mask, field.Reduce(t.coeff)});
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const Term& a, const Term& b) { return a.mask < b.mask; });
  std::vector<Term> merged;
  merged.reserve(sorted.size());
  for (const Term& t : sorted) {
    if (!merged.empty() && merged.back().mask == t.mask) {
      merged.back().coeff = field.Add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return MultilinearPoly(n, field, std::move(merged));
}

FieldElem MultilinearPoly::coeff(VarMask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, VarMask m) { return t.mask < m; });
  if (it != terms_.end() && it->mask == mask) return FieldElem(it->coeff, field_);
  return FieldElem(0, field_);
}

VarMask MultilinearPoly::support() const {
  VarMask s = 0;
  for (const Term& t : terms_) s |= t.mask;
  return s;
}

int MultilinearPoly::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, std::popcount(t.mask));
  return d;
}

MultilinearPoly MultilinearPoly::Scaled(uint64_t c) const {
  c = field_.Reduce(c);
  if (c == 0) return MultilinearPoly(n_, field_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = field_.Mul(t.coeff, c);
  return MultilinearPoly(n_, field_, std::move(out));
}

MultilinearPoly MultilinearPoly::TimesVariable(int index, uint64_t c) const {
  if (index < 0 || index >= n_) {
    throw Error(ErrorCode::kDimensionMismatch, "variable index " + std::to_string(index));
  }
  c = field_.Reduce(c);
  if (c == 0) return MultilinearPoly(n_, field_);
  const VarMask bit = VarMask{1} << index;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (t.mask & bit) {
      throw Error(ErrorCode::kNonMultilinear,
                  "x" + std::to_string(index) + " multiplied twice into a monomial");
    }
    out.push_back({t.mask | bit, field_.Mul(t.coeff, c)});
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.mask < b.mask; });
  return MultilinearPoly(n_, field_, std::move(out));
}

MultilinearPoly MultilinearPoly::RestrictZero(VarMask zeroed) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if ((t.mask & zeroed) == 0) out.push_back(t);
  }
  return MultilinearPoly(n_, field_, std::move(out));
}

std::string MultilinearPoly::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = t.coeff == 1 && t.mask != 0;
    if (!unit) os << t.coeff;
    bool need_dot = !unit;
    for (int i = 0; i < n_; ++i) {
      if (t.mask >> i & 1) {
        if (need_dot) os << '*';
        os << 'x' << i;
        need_dot = true;
      }
    }
  }
  return os.str();
}

MultilinearPoly Add(const MultilinearPoly& f, const MultilinearPoly& g) {
  CheckCompatible(f, g);
  const Field& F = f.field();
  std::vector<MultilinearPoly::Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin();
  auto b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && a->mask < b->mask)) {
      out.push_back(*a++);
    } else if (a == f.terms_.end() || b->mask < a->mask) {
      out.push_back(*b++);
    } else {
      uint64_t c = F.Add(a->coeff, b->coeff);
      if (c != 0) out.push_back({a->mask, c});
      ++a;
      ++b;
    }
  }
  return MultilinearPoly(f.n_, F, std::move(out));
}

MultilinearPoly Subtract(const MultilinearPoly& f, const MultilinearPoly& g) {
  return Add(f, g.Scaled(g.field().Neg(1)));
}

MultilinearPoly Multiply(const MultilinearPoly& f, const MultilinearPoly& g) {
  CheckCompatible(f, g);
  const VarMask shared = f.support() & g.support();
  if (shared != 0) {
    throw Error(ErrorCode::kOverlappingSupports,
                "operands share x" + std::to_string(std::countr_zero(shared)));
  }
  const Field& F = f.field();
  // Disjoint supports: every product mask is distinct, so no merging needed.
  std::vector<MultilinearPoly::Term> out;
  out.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      out.push_back({a.mask | b.mask, F.Mul(a.coeff, b.coeff)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.mask < y.mask; });
  return MultilinearPoly(f.n_, F, std::move(out));
}

uint64_t EvaluateRaw(const MultilinearPoly& f, std::span<const uint64_t> point) {
  if (point.size() != static_cast<size_t>(f.num_vars())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " +
                    std::to_string(f.num_vars()));
  }
  const Field& F = f.field();
  uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    uint64_t term = t.coeff;
    for (VarMask m = t.mask; m != 0; m &= m - 1) {
      term = F.Mul(term, F.Reduce(point[std::countr_zero(m)]));
    }
    acc = F.Add(acc, term);
  }
  return acc;
}

FieldElem Evaluate(const MultilinearPoly& f, std::span<const FieldElem> point) {
  std::vector<uint64_t> raw;
  raw.reserve(point.size());
  for (const FieldElem& e : point) {
    if (e.modulus() != f.field().modulus()) {
      throw Error(ErrorCode::kModulusMismatch, "evaluation point outside the field");
    }
    raw.push_back(e.value());
  }
  return FieldElem(EvaluateRaw(f, raw), f.field());
}

PolyAccumulator::PolyAccumulator(int n, const Field& field) : n_(n), field_(field) {
  CheckVarCount(n);
}

void PolyAccumulator::AddTerm(VarMask mask, uint64_t coeff) {
  uint64_t& slot = acc_[mask];
  slot = field_.Add(slot, field_.Reduce(coeff));
}

void PolyAccumulator::AddPoly(const MultilinearPoly& f, uint64_t scale) {
  scale = field_.Reduce(scale);
  if (scale == 0) return;
  for (const auto& t : f.terms()) AddTerm(t.mask, field_.Mul(t.coeff, scale));
}

MultilinearPoly PolyAccumulator::Build() const {
  std::vector<MultilinearPoly::Term> terms;
  terms.reserve(acc_.size());
  for (const auto& [mask, c] : acc_) terms.push_back({mask, c});
  return MultilinearPoly::FromTerms(n_, field_, terms);
}

}  // namespace boundread
