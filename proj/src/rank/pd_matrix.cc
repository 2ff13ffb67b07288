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

#include "boundread/rank/pd_matrix.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "boundread/core/error.h"

namespace boundread {
namespace {

void CheckShape(const MultilinearPoly& f, const Partition& phi) {
  if (phi.num_vars() != f.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "partition over " + std::to_string(phi.num_vars()) + " variables, polynomial over " +
                    std::to_string(f.num_vars()));
  }
  if (phi.y_size() > PdMatrix::kMaxSideVars || phi.z_size() > PdMatrix::kMaxSideVars) {
    throw Error(ErrorCode::kCapExceeded, "partial derivative matrix side exceeds " +
                                             std::to_string(PdMatrix::kMaxSideVars) +
                                             " variables");
  }
}

}  // namespace

std::pair<uint64_t, uint64_t> SplitMask(VarMask mask, const Partition& phi) {
  uint64_t y = 0, z = 0;
  int yi = 0, zi = 0;
  for (int i = 0; i < phi.num_vars(); ++i) {
    const uint64_t bit = (mask >> i) & 1;
    if (phi.in_y(i)) {
      y |= bit << yi++;
    } else {
      z |= bit << zi++;
    }
  }
  return {y, z};
}

PdMatrix PdMatrix::Transposed() const {
  PdMatrix t(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.data_[static_cast<size_t>(c) * rows_ + r] = at(r, c);
  }
  return t;
}

PdMatrix BuildPdMatrix(const MultilinearPoly& f, const Partition& phi) {
  CheckShape(f, phi);
  PdMatrix m(1 << phi.y_size(), 1 << phi.z_size(), f.field());
  for (const auto& term : f.terms()) {
    auto [y, z] = SplitMask(term.mask, phi);
    m.data_[y * m.cols_ + z] = term.coeff;
  }
  return m;
}

int MatrixRank(std::vector<uint64_t> a, int rows, int cols, const Field& field) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<size_t>(r) * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    uint64_t* prow = &a[static_cast<size_t>(pivot) * cols];
    if (pivot != rank) {
      std::swap_ranges(prow, prow + cols, &a[static_cast<size_t>(rank) * cols]);
      prow = &a[static_cast<size_t>(rank) * cols];
    }
    const uint64_t inv = field.Inv(prow[c]);
    for (int r = rank + 1; r < rows; ++r) {
      uint64_t* row = &a[static_cast<size_t>(r) * cols];
      if (row[c] == 0) continue;
      const uint64_t factor = field.Mul(row[c], inv);
      for (int k = c; k < cols; ++k) {
        if (prow[k] != 0) row[k] = field.Sub(row[k], field.Mul(factor, prow[k]));
      }
    }
    ++rank;
  }
  return rank;
}

int RankOf(const MultilinearPoly& f, const Partition& phi) {
  CheckShape(f, phi);
  // Index only the Y- and Z-monomials that occur.
  std::unordered_map<uint64_t, int> row_id, col_id;
  std::vector<std::pair<uint64_t, uint64_t>> split;
  split.reserve(f.num_terms());
  for (const auto& term : f.terms()) {
    auto yz = SplitMask(term.mask, phi);
    row_id.emplace(yz.first, static_cast<int>(row_id.size()));
    col_id.emplace(yz.second, static_cast<int>(col_id.size()));
    split.push_back(yz);
  }
  const int rows = static_cast<int>(row_id.size());
  const int cols = static_cast<int>(col_id.size());
  std::vector<uint64_t> a(static_cast<size_t>(rows) * cols, 0);
  for (size_t i = 0; i < split.size(); ++i) {
    a[static_cast<size_t>(row_id[split[i].first]) * cols + col_id[split[i].second]] =
        f.terms()[i].coeff;
  }
  return MatrixRank(std::move(a), rows, cols, f.field());
}

}  // namespace boundread
