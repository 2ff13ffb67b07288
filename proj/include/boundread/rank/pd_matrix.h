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

#ifndef BOUNDREAD_RANK_PD_MATRIX_H_
#define BOUNDREAD_RANK_PD_MATRIX_H_

#include <cstdint>
#include <vector>

#include "boundread/core/field.h"
#include "boundread/core/multilinear.h"
#include "boundread/partitions/partition.h"

namespace boundread {

// Partial derivative matrix: rows are Y-monomials, columns Z-monomials, both
// in ascending (compressed) bitmask order. Entry (i, j) is the coefficient of
// m_i * s_j.
class PdMatrix {
 public:
  static constexpr int kMaxSideVars = 14;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }
  uint64_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const std::vector<uint64_t>& data() const { return data_; }
  PdMatrix Transposed() const;

  friend bool operator==(const PdMatrix&, const PdMatrix&) = default;

 private:
  friend PdMatrix BuildPdMatrix(const MultilinearPoly& f, const Partition& phi);
  PdMatrix(int rows, int cols, const Field& field)
      : rows_(rows), cols_(cols), field_(field), data_(static_cast<size_t>(rows) * cols, 0) {}

  int rows_;
  int cols_;
  Field field_;
  std::vector<uint64_t> data_;
};

// kDimensionMismatch unless phi covers exactly f's variables; kCapExceeded if
// either side has more than kMaxSideVars variables.
PdMatrix BuildPdMatrix(const MultilinearPoly& f, const Partition& phi);

// Rank of a dense row-major matrix by Gaussian elimination mod p.
int MatrixRank(std::vector<uint64_t> data, int rows, int cols, const Field& field);

// rank_phi(f). Same preconditions as BuildPdMatrix; only the nonzero rows
// and columns are materialized.
int RankOf(const MultilinearPoly& f, const Partition& phi);

// Splits a mask into its (Y-part, Z-part), each compressed to consecutive
// bits in ascending variable order.
std::pair<uint64_t, uint64_t> SplitMask(VarMask mask, const Partition& phi);

}  // namespace boundread

#endif  // BOUNDREAD_RANK_PD_MATRIX_H_
