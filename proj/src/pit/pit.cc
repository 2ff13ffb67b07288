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

#include "boundread/pit/pit.h"

#include <bit>
#include <utility>

#include "boundread/core/error.h"
#include "boundread/models/validators.h"
#include "boundread/transforms/roabp_convert.h"

namespace boundread {
namespace {

using Row = std::vector<uint64_t>;

// Keeps a subset of the offered rows that is linearly independent, with an
// echelon copy for the membership test.
class RowBasis {
 public:
  RowBasis(const Field& field, size_t cols) : f_(field), cols_(cols) {}

  void Offer(Row row, VarMask label) {
    Row r = row;
    for (size_t k = 0; k < echelon_.size(); ++k) {
      const uint64_t c = r[pivot_[k]];
      if (c == 0) continue;
      for (size_t j = 0; j < cols_; ++j) r[j] = f_.Sub(r[j], f_.Mul(c, echelon_[k][j]));
    }
    size_t p = 0;
    while (p < cols_ && r[p] == 0) ++p;
    if (p == cols_) return;
    const uint64_t inv = f_.Inv(r[p]);
    for (uint64_t& v : r) v = f_.Mul(v, inv);
    echelon_.push_back(std::move(r));
    pivot_.push_back(p);
    rows_.push_back(std::move(row));
    labels_.push_back(label);
  }

  std::vector<Row> rows_;
  std::vector<VarMask> labels_;

 private:
  const Field& f_;
  size_t cols_;
  std::vector<Row> echelon_;
  std::vector<size_t> pivot_;
};

struct Sweep {
  bool zero = true;
  VarMask mask = 0;
  uint64_t coeff = 0;
  size_t max_basis = 0;
};

// `allowed` masks out variable edges, i.e. restricts to x_j = 0 elsewhere.
Sweep RunSweep(const Abp& abp, VarMask allowed) {
  const Field& F = abp.field();
  const auto& layers = abp.layers();
  std::vector<int> pos(abp.num_nodes());
  for (const auto& layer : layers)
    for (size_t i = 0; i < layer.size(); ++i) pos[layer[i]] = static_cast<int>(i);

  std::vector<Row> rows{Row{1}};
  std::vector<VarMask> labels{0};
  Sweep out;
  out.max_basis = 1;
  for (size_t k = 0; k + 1 < layers.size(); ++k) {
    const size_t w_in = layers[k].size(), w_out = layers[k + 1].size();
    Row a(w_in * w_out, 0), b(w_in * w_out, 0);
    int var = -1;
    for (int u : layers[k]) {
      for (int e : abp.out_edges(u)) {
        const AbpEdge& edge = abp.edges()[e];
        const size_t at = pos[u] * w_out + pos[edge.to];
        if (edge.is_constant()) {
          a[at] = F.Add(a[at], edge.coeff);
        } else if ((allowed >> edge.var) & 1) {
          var = edge.var;
          b[at] = F.Add(b[at], edge.coeff);
        }
      }
    }
    RowBasis next(F, w_out);
    for (size_t i = 0; i < rows.size(); ++i) {
      for (int part = 0; part < (var < 0 ? 1 : 2); ++part) {
        const Row& m = part == 0 ? a : b;
        Row r(w_out, 0);
        for (size_t u = 0; u < w_in; ++u) {
          if (rows[i][u] == 0) continue;
          for (size_t v = 0; v < w_out; ++v)
            r[v] = F.Add(r[v], F.Mul(rows[i][u], m[u * w_out + v]));
        }
        next.Offer(std::move(r), part == 0 ? labels[i] : labels[i] | (VarMask{1} << var));
      }
    }
    if (next.rows_.size() > w_out) throw Error(ErrorCode::kInvalidModel, "basis exceeds layer width");
    rows = std::move(next.rows_);
    labels = std::move(next.labels_);
    out.max_basis = std::max(out.max_basis, rows.size());
  }
  if (!rows.empty()) {
    out.zero = false;
    out.mask = labels.front();
    out.coeff = rows.front().front();
  }
  return out;
}

}  // namespace

PitResult RoabpPit(const Abp& input) {
  const Abp abp = Prune(input);
  const RoabpCheck check = CheckObliviousRoabp(abp);
  if (!check.report.ok) throw Error(ErrorCode::kNotRoabp, "not a ROABP: " + check.report.witness);

  const VarMask all = abp.num_vars() == 64 ? ~VarMask{0} : (VarMask{1} << abp.num_vars()) - 1;
  const Sweep first = RunSweep(abp, all);
  PitResult result;
  result.max_basis = first.max_basis;
  if (first.zero) return result;

  // Drop variables one at a time; a variable whose removal kills the
  // restriction can never be dropped later, so one pass gives a minimal mask.
  Sweep best = first;
  for (VarMask rest = first.mask; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (!((best.mask >> i) & 1)) continue;
    const Sweep trial = RunSweep(abp, best.mask & ~(VarMask{1} << i));
    if (!trial.zero) best = trial;
  }
  result.zero = false;
  result.witness_mask = best.mask;
  result.witness_coeff = best.coeff;
  result.witness_point.assign(abp.num_vars(), 0);
  for (int i = 0; i < abp.num_vars(); ++i)
    if ((best.mask >> i) & 1) result.witness_point[i] = 1;
  return result;
}

PitResult StrictIntervalPit(const Abp& abp) {
  return RoabpPit(ConvertStrictInterval(abp).roabp);
}

}  // namespace boundread
