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

#include "boundread/core/field.h"

#include <array>

#include "boundread/core/error.h"

namespace boundread {
namespace {

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t PowMod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = MulMod(r, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool TrialDivision(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Deterministic for all 64-bit inputs with this witness set.
bool MillerRabin(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (p % small == 0) return p == small;
  }
  uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

constexpr std::array<uint64_t, 2> kTrustedPrimes = {
    (uint64_t{1} << 31) - 1,
    (uint64_t{1} << 61) - 1,
};

}  // namespace

bool IsPrime(uint64_t p) {
  if (p < (uint64_t{1} << 20)) return TrialDivision(p);
  for (uint64_t trusted : kTrustedPrimes) {
    if (p == trusted) return true;
  }
  return MillerRabin(p);
}

Field::Field(uint64_t modulus) : p_(modulus) {
  if (modulus >= kMaxModulus || !IsPrime(modulus)) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus " + std::to_string(modulus) + " is not a prime below 2^62");
  }
}

uint64_t Field::FromSigned(int64_t a) const {
  int64_t r = a % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return static_cast<uint64_t>(r);
}

uint64_t Field::Pow(uint64_t a, uint64_t e) const { return PowMod(a, e, p_); }

uint64_t Field::Inv(uint64_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return PowMod(a, p_ - 2, p_);
}

FieldElem::FieldElem(uint64_t value, uint64_t modulus)
    : value_(modulus == 0 ? value : value % modulus), modulus_(modulus) {
  if (modulus < 2) throw Error(ErrorCode::kInvalidArgument, "modulus below 2");
}

namespace {

Field SharedField(const FieldElem& a, const FieldElem& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kModulusMismatch,
                std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()));
  }
  return Field(a.modulus());
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  Field f = SharedField(a, b);
  return FieldElem(f.Add(a.value_, b.value_), f);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  Field f = SharedField(a, b);
  return FieldElem(f.Sub(a.value_, b.value_), f);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  Field f = SharedField(a, b);
  return FieldElem(f.Mul(a.value_, b.value_), f);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  Field f = SharedField(a, b);
  return FieldElem(f.Div(a.value_, b.value_), f);
}

std::string FieldElem::ToString() const { return std::to_string(value_); }

FieldElem Arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown arithmetic op");
}

}  // namespace boundread
