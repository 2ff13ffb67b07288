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

#ifndef BOUNDREAD_CORE_FIELD_H_
#define BOUNDREAD_CORE_FIELD_H_

#include <cstdint>
#include <string>

namespace boundread {

// Prime field F_p with p < 2^62. Elements are plain residues in [0, p); the
// Field object carries the modulus and does the arithmetic.
class Field {
 public:
  static constexpr uint64_t kDefaultModulus = (uint64_t{1} << 31) - 1;
  static constexpr uint64_t kMaxModulus = uint64_t{1} << 62;

  // Throws kInvalidArgument unless `modulus` is a prime below kMaxModulus.
  explicit Field(uint64_t modulus = kDefaultModulus);

  uint64_t modulus() const { return p_; }

  uint64_t Reduce(uint64_t a) const { return a % p_; }
  uint64_t FromSigned(int64_t a) const;
  uint64_t Add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t Sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t Neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t Mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  uint64_t Pow(uint64_t a, uint64_t e) const;
  // Fermat inverse a^(p-2). Throws kDivisionByZero for a == 0.
  uint64_t Inv(uint64_t a) const;
  uint64_t Div(uint64_t a, uint64_t b) const { return Mul(a, Inv(b)); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  uint64_t p_;
};

bool IsPrime(uint64_t p);

// A residue tagged with its modulus. Mixing moduli throws kModulusMismatch.
class FieldElem {
 public:
  FieldElem(uint64_t value, uint64_t modulus);
  FieldElem(uint64_t value, const Field& field) : FieldElem(value, field.modulus()) {}

  uint64_t value() const { return value_; }
  uint64_t modulus() const { return modulus_; }
  Field field() const { return Field(modulus_); }
  bool is_zero() const { return value_ == 0; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

  std::string ToString() const;

 private:
  uint64_t value_;
  uint64_t modulus_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

FieldElem Arith(const FieldElem& a, const FieldElem& b, ArithOp op);

}  // namespace boundread

#endif  // BOUNDREAD_CORE_FIELD_H_
