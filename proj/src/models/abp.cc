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

#include "boundread/models/abp.h"

#include <algorithm>
#include <sstream>

#include "boundread/core/error.h"

namespace boundread {

Abp::Abp(int n, const Field& field, std::vector<std::vector<int>> layers,
         std::vector<AbpEdge> edges)
    : n_(n), field_(field), layers_(std::move(layers)) {
  if (n < 0 || n > kMaxVars) {
    throw Error(ErrorCode::kInvalidModel, "ABP over " + std::to_string(n) + " variables");
  }
  if (layers_.size() < 2) throw Error(ErrorCode::kInvalidModel, "ABP needs at least two layers");
  if (layers_.front().size() != 1 || layers_.back().size() != 1) {
    throw Error(ErrorCode::kInvalidModel, "first and last layers must be {s} and {t}");
  }
  int num_nodes = 0;
  for (const auto& layer : layers_) num_nodes += static_cast<int>(layer.size());
  layer_of_.assign(num_nodes, -1);
  for (int k = 0; k < static_cast<int>(layers_.size()); ++k) {
    for (int v : layers_[k]) {
      if (v < 0 || v >= num_nodes || layer_of_[v] != -1) {
        throw Error(ErrorCode::kInvalidModel,
                    "node ids must be 0..N-1, each in exactly one layer (bad id " +
                        std::to_string(v) + ")");
      }
      layer_of_[v] = k;
    }
  }
  out_.resize(num_nodes);
  in_.resize(num_nodes);
  for (AbpEdge e : edges) {
    if (e.from < 0 || e.from >= num_nodes || e.to < 0 || e.to >= num_nodes) {
      throw Error(ErrorCode::kInvalidModel, "edge endpoint out of range");
    }
    if (layer_of_[e.to] != layer_of_[e.from] + 1) {
      throw Error(ErrorCode::kInvalidModel,
                  "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                      " does not join consecutive layers");
    }
    if (e.var != AbpEdge::kConstant && (e.var < 0 || e.var >= n)) {
      throw Error(ErrorCode::kInvalidModel, "edge variable x" + std::to_string(e.var));
    }
    e.coeff = field_.Reduce(e.coeff);
    if (e.coeff == 0) continue;
    out_[e.from].push_back(static_cast<int>(edges_.size()));
    in_[e.to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back(e);
  }
}

int Abp::width() const {
  size_t w = 0;
  for (const auto& layer : layers_) w = std::max(w, layer.size());
  return static_cast<int>(w);
}

std::vector<int> Abp::TopologicalOrder() const {
  std::vector<int> order;
  order.reserve(layer_of_.size());
  for (const auto& layer : layers_) order.insert(order.end(), layer.begin(), layer.end());
  return order;
}

int AbpBuilder::AddLayer() {
  layers_.emplace_back();
  return static_cast<int>(layers_.size()) - 1;
}

int AbpBuilder::AddNode(int layer) {
  layers_.at(layer).push_back(next_node_);
  return next_node_++;
}

void AbpBuilder::AddEdge(int from, int to, int var, uint64_t coeff) {
  coeff = field_.Reduce(coeff);
  if (coeff == 0) return;
  edges_.push_back({from, to, var, coeff});
}

Abp AbpBuilder::Build() const { return Abp(n_, field_, layers_, edges_); }

ReachVars ComputeReachVars(const Abp& abp) {
  const int N = abp.num_nodes();
  ReachVars rv{std::vector<VarMask>(N, 0), std::vector<VarMask>(N, 0)};
  const std::vector<int> order = abp.TopologicalOrder();
  for (int v : order) {
    for (int ei : abp.in_edges(v)) {
      const AbpEdge& e = abp.edges()[ei];
      rv.before[v] |= rv.before[e.from] | (e.is_constant() ? 0 : VarMask{1} << e.var);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    for (int ei : abp.out_edges(v)) {
      const AbpEdge& e = abp.edges()[ei];
      rv.after[v] |= rv.after[e.to] | (e.is_constant() ? 0 : VarMask{1} << e.var);
    }
  }
  return rv;
}

std::vector<bool> UsefulNodes(const Abp& abp) {
  const int N = abp.num_nodes();
  std::vector<bool> fwd(N, false), bwd(N, false);
  const std::vector<int> order = abp.TopologicalOrder();
  fwd[abp.source()] = true;
  for (int v : order) {
    if (!fwd[v]) continue;
    for (int ei : abp.out_edges(v)) fwd[abp.edges()[ei].to] = true;
  }
  bwd[abp.sink()] = true;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!bwd[*it]) continue;
    for (int ei : abp.in_edges(*it)) bwd[abp.edges()[ei].from] = true;
  }
  std::vector<bool> useful(N);
  for (int v = 0; v < N; ++v) useful[v] = fwd[v] && bwd[v];
  return useful;
}

Abp Prune(const Abp& abp) {
  const std::vector<bool> useful = UsefulNodes(abp);
  if (!useful[abp.source()]) {
    return Abp(abp.num_vars(), abp.field(), {{0}, {1}}, {});
  }
  std::vector<int> remap(abp.num_nodes(), -1);
  std::vector<std::vector<int>> layers;
  int next = 0;
  for (const auto& layer : abp.layers()) {
    std::vector<int> kept;
    for (int v : layer) {
      if (useful[v]) {
        remap[v] = next++;
        kept.push_back(remap[v]);
      }
    }
    layers.push_back(std::move(kept));
  }
  std::vector<AbpEdge> edges;
  for (const AbpEdge& e : abp.edges()) {
    if (useful[e.from] && useful[e.to]) {
      edges.push_back({remap[e.from], remap[e.to], e.var, e.coeff});
    }
  }
  return Abp(abp.num_vars(), abp.field(), std::move(layers), std::move(edges));
}

MultilinearPoly ExpandAbp(const Abp& abp) {
  const Field& F = abp.field();
  const int n = abp.num_vars();
  if (n > MultilinearPoly::kMaxVars) {
    throw Error(ErrorCode::kCapExceeded, "ABP expansion limited to " +
                                             std::to_string(MultilinearPoly::kMaxVars) +
                                             " variables");
  }
  const std::vector<bool> useful = UsefulNodes(abp);
  const ReachVars rv = ComputeReachVars(abp);
  for (const AbpEdge& e : abp.edges()) {
    if (!e.is_constant() && useful[e.from] && useful[e.to] &&
        ((rv.before[e.from] | rv.after[e.to]) >> e.var & 1)) {
      throw Error(ErrorCode::kNonMultilinear,
                  "some s-t path through edge " + std::to_string(e.from) + "->" +
                      std::to_string(e.to) + " reads x" + std::to_string(e.var) + " twice");
    }
  }
  std::vector<MultilinearPoly> at(abp.num_nodes(), MultilinearPoly(n, F));
  at[abp.source()] = MultilinearPoly::Constant(n, F, 1);
  for (int v : abp.TopologicalOrder()) {
    if (!useful[v] || v == abp.source()) continue;
    PolyAccumulator acc(n, F);
    for (int ei : abp.in_edges(v)) {
      const AbpEdge& e = abp.edges()[ei];
      if (!useful[e.from]) continue;
      if (e.is_constant()) {
        acc.AddPoly(at[e.from], e.coeff);
      } else {
        acc.AddPoly(at[e.from].TimesVariable(e.var, e.coeff));
      }
    }
    at[v] = acc.Build();
  }
  return at[abp.sink()];
}

uint64_t EvaluateAbp(const Abp& abp, std::span<const uint64_t> point) {
  if (point.size() != static_cast<size_t>(abp.num_vars())) {
    throw Error(ErrorCode::kDimensionMismatch, "evaluation point length");
  }
  const Field& F = abp.field();
  std::vector<uint64_t> val(abp.num_nodes(), 0);
  val[abp.source()] = 1;
  for (int v : abp.TopologicalOrder()) {
    for (int ei : abp.in_edges(v)) {
      const AbpEdge& e = abp.edges()[ei];
      uint64_t w = e.is_constant() ? e.coeff : F.Mul(e.coeff, F.Reduce(point[e.var]));
      val[v] = F.Add(val[v], F.Mul(val[e.from], w));
    }
  }
  return val[abp.sink()];
}

Abp ScaleAbp(const Abp& abp, uint64_t c) {
  std::vector<AbpEdge> edges = abp.edges();
  for (AbpEdge& e : edges) {
    if (e.from == abp.source()) e.coeff = abp.field().Mul(e.coeff, abp.field().Reduce(c));
  }
  return Abp(abp.num_vars(), abp.field(), abp.layers(), std::move(edges));
}

Abp GlueParallel(const Abp& a, const Abp& b) {
  if (a.num_vars() != b.num_vars() || !(a.field() == b.field())) {
    throw Error(ErrorCode::kDimensionMismatch, "gluing programs over different spaces");
  }
  const int m = std::max(a.num_layers(), b.num_layers()) - 1;
  AbpBuilder builder(a.num_vars(), a.field());
  for (int k = 0; k <= m; ++k) builder.AddLayer();
  const int s = builder.AddNode(0);
  // Intermediate nodes are created layer by layer so ids stay layer-sorted.
  std::vector<int> map_a(a.num_nodes(), -1), map_b(b.num_nodes(), -1);
  std::vector<int> tail_a, tail_b;
  auto place = [&](const Abp& p, std::vector<int>& map, std::vector<int>& tail, int k) {
    const int mp = p.num_layers() - 1;
    if (k < mp) {
      for (int v : p.layers()[k]) map[v] = builder.AddNode(k);
    } else if (mp < m) {
      // k == mp holds p's sink; later layers carry the padding chain.
      const int node = builder.AddNode(k);
      if (k == mp) map[p.sink()] = node;
      tail.push_back(node);
    }
  };
  for (int k = 1; k < m; ++k) {
    place(a, map_a, tail_a, k);
    place(b, map_b, tail_b, k);
  }
  const int t = builder.AddNode(m);
  for (auto [p, map, tail] : {std::tie(a, map_a, tail_a), std::tie(b, map_b, tail_b)}) {
    map[p.source()] = s;
    if (p.num_layers() - 1 == m) map[p.sink()] = t;
    for (const AbpEdge& e : p.edges()) builder.AddEdge(map[e.from], map[e.to], e.var, e.coeff);
    for (size_t i = 0; i + 1 < tail.size(); ++i) builder.AddConstEdge(tail[i], tail[i + 1], 1);
    if (!tail.empty()) builder.AddConstEdge(tail.back(), t, 1);
  }
  return builder.Build();
}

std::string AbpSummary(const Abp& abp) {
  std::ostringstream os;
  os << "abp(n=" << abp.num_vars() << ", layers=" << abp.num_layers()
     << ", nodes=" << abp.num_nodes() << ", edges=" << abp.edges().size()
     << ", width=" << abp.width() << ")";
  return os.str();
}

}  // namespace boundread
