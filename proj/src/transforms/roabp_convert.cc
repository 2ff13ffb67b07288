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

#include "boundread/transforms/roabp_convert.h"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <string>

#include "boundread/core/error.h"
#include "boundread/models/validators.h"

namespace boundread {
namespace {

// Subprogram on the kept nodes and edges, pruned.
template <typename KeepNode, typename KeepEdge>
Abp Induced(const Abp& abp, KeepNode keep_node, KeepEdge keep_edge) {
  std::vector<int> remap(abp.num_nodes(), -1);
  std::vector<std::vector<int>> layers;
  int next = 0;
  for (const auto& layer : abp.layers()) {
    std::vector<int> kept;
    for (int v : layer) {
      if (v == abp.source() || v == abp.sink() || keep_node(v)) {
        remap[v] = next++;
        kept.push_back(remap[v]);
      }
    }
    layers.push_back(std::move(kept));
  }
  std::vector<AbpEdge> edges;
  for (const AbpEdge& e : abp.edges()) {
    if (remap[e.from] >= 0 && remap[e.to] >= 0 && keep_edge(e)) {
      edges.push_back({remap[e.from], remap[e.to], e.var, e.coeff});
    }
  }
  return Prune(Abp(abp.num_vars(), abp.field(), std::move(layers), std::move(edges)));
}

// Variable read by each layer's useful edges (kConstant if none); kNotRoabp
// if the program is not a ROABP.
std::vector<int> LayerVars(const Abp& abp) {
  const RoabpCheck check = CheckObliviousRoabp(abp);
  if (!check.report.ok) throw Error(ErrorCode::kNotRoabp, check.report.witness);
  const std::vector<bool> useful = UsefulNodes(abp);
  std::vector<int> vars(abp.num_layers(), AbpEdge::kConstant);
  for (const AbpEdge& e : abp.edges()) {
    if (!e.is_constant() && useful[e.from] && useful[e.to]) vars[abp.layer_of(e.from)] = e.var;
  }
  return vars;
}

std::vector<int> ReadOrder(const std::vector<int>& layer_vars) {
  std::vector<int> order;
  for (int v : layer_vars) {
    if (v != AbpEdge::kConstant) order.push_back(v);
  }
  return order;
}

// Merge of two read orders keeping both relative orders, smallest variable
// first among the available ones.
std::vector<int> MergeOrders(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<int, std::vector<int>> succ;
  std::map<int, int> indegree;
  for (const auto* seq : {&a, &b}) {
    for (size_t i = 0; i < seq->size(); ++i) {
      indegree.emplace((*seq)[i], 0);
      if (i + 1 < seq->size()) {
        succ[(*seq)[i]].push_back((*seq)[i + 1]);
        ++indegree[(*seq)[i + 1]];
      }
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (auto [v, d] : indegree) {
    if (d == 0) ready.push(v);
  }
  std::vector<int> merged;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    merged.push_back(v);
    for (int w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (merged.size() != indegree.size()) {
    throw Error(ErrorCode::kOrderMismatch, "the programs read common variables in different orders");
  }
  return merged;
}

}  // namespace

NodeClassification ClassifyNodes(const Abp& abp) {
  const int N = abp.num_nodes();
  const std::vector<bool> useful = UsefulNodes(abp);
  const ReachVars rv = ComputeReachVars(abp);
  NodeClassification out{std::vector<NodeTag>(N, NodeTag::kTerminal), std::vector<bool>(N, false),
                         std::vector<VarMask>(N, 0), std::vector<VarMask>(N, 0)};
  for (int v = 0; v < N; ++v) {
    if (!useful[v]) continue;
    out.before[v] = rv.before[v];
    out.after[v] = rv.after[v];
    if (v == abp.source() || v == abp.sink()) continue;
    const Span a = Span::Of(rv.before[v]);
    const Span b = Span::Of(rv.after[v]);
    if (a.empty() || b.empty()) {
      out.tag[v] = NodeTag::kAscending;
      out.neutral[v] = true;
    } else if (a.hi < b.lo) {
      out.tag[v] = NodeTag::kAscending;
    } else if (b.hi < a.lo) {
      out.tag[v] = NodeTag::kDescending;
    } else {
      throw Error(ErrorCode::kMixedClassification,
                  "node " + std::to_string(v) + ": span " + a.ToString() + " before and " +
                      b.ToString() + " after overlap");
    }
  }
  return out;
}

AscDescSplit SplitAscDesc(const Abp& abp) {
  const NodeClassification cls = ClassifyNodes(abp);
  auto prefix_neutral = [&](int v) {
    return cls.neutral[v] && cls.before[v] == 0 && cls.after[v] != 0;
  };
  auto suffix_neutral = [&](int v) {
    return cls.neutral[v] && cls.after[v] == 0 && cls.before[v] != 0;
  };
  Abp p1 = Induced(
      abp, [&](int v) { return cls.tag[v] == NodeTag::kAscending; },
      [](const AbpEdge&) { return true; });
  Abp p2 = Induced(
      abp,
      [&](int v) {
        return cls.tag[v] == NodeTag::kDescending || prefix_neutral(v) || suffix_neutral(v);
      },
      [&](const AbpEdge& e) {
        const bool from_prefix = e.from == abp.source() || prefix_neutral(e.from);
        const bool to_suffix = e.to == abp.sink() || suffix_neutral(e.to);
        return !(from_prefix && to_suffix);
      });
  return {std::move(p1), std::move(p2)};
}

Abp ReverseAbp(const Abp& abp) {
  std::vector<std::vector<int>> layers(abp.layers().rbegin(), abp.layers().rend());
  std::vector<AbpEdge> edges;
  edges.reserve(abp.edges().size());
  for (const AbpEdge& e : abp.edges()) edges.push_back({e.to, e.from, e.var, e.coeff});
  return Abp(abp.num_vars(), abp.field(), std::move(layers), std::move(edges));
}

Abp StaggerToOrder(const Abp& input, std::span<const int> order) {
  const Abp p = Prune(input);
  const Field& F = p.field();
  const int N = p.num_nodes();
  const int L = static_cast<int>(order.size());
  std::vector<int> pos(p.num_vars(), -1);
  for (int k = 0; k < L; ++k) {
    if (order[k] < 0 || order[k] >= p.num_vars() || pos[order[k]] != -1) {
      throw Error(ErrorCode::kInvalidArgument, "order must list distinct variables below n");
    }
    pos[order[k]] = k;
  }
  const ReachVars rv = ComputeReachVars(p);
  // States: the source and every head of a variable edge. first_read[w] is
  // the earliest order position of a variable edge entering w.
  std::vector<int> first_read(N, L);
  first_read[p.source()] = -1;
  for (const AbpEdge& e : p.edges()) {
    if (e.is_constant()) continue;
    if (pos[e.var] < 0) {
      throw Error(ErrorCode::kOrderMismatch, "x" + std::to_string(e.var) + " is not in the order");
    }
    for (VarMask m = rv.before[e.from]; m != 0; m &= m - 1) {
      const int prior = std::countr_zero(m);
      if (pos[prior] < 0 || pos[prior] >= pos[e.var]) {
        throw Error(ErrorCode::kMixedClassification,
                    "edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " reads x" +
                        std::to_string(e.var) + " after x" + std::to_string(prior) +
                        ", against the order");
      }
    }
    first_read[e.to] = std::min(first_read[e.to], pos[e.var]);
  }
  std::vector<int> states;
  for (int v : p.TopologicalOrder()) {
    if (first_read[v] < L) states.push_back(v);
  }
  // closure[i][u]: total weight of constant-only paths from states[i] to u.
  const std::vector<int> topo = p.TopologicalOrder();
  std::vector<std::vector<uint64_t>> closure(states.size(), std::vector<uint64_t>(N, 0));
  for (size_t i = 0; i < states.size(); ++i) {
    auto& c = closure[i];
    c[states[i]] = 1;
    for (int u : topo) {
      if (c[u] == 0) continue;
      for (int ei : p.out_edges(u)) {
        const AbpEdge& e = p.edges()[ei];
        if (e.is_constant()) c[e.to] = F.Add(c[e.to], F.Mul(c[u], e.coeff));
      }
    }
  }
  std::vector<int> state_index(N, -1);
  for (size_t i = 0; i < states.size(); ++i) state_index[states[i]] = static_cast<int>(i);
  // Variable edges grouped by order position.
  std::vector<std::vector<int>> reads_at(L);
  for (int ei = 0; ei < static_cast<int>(p.edges().size()); ++ei) {
    const AbpEdge& e = p.edges()[ei];
    if (!e.is_constant()) reads_at[pos[e.var]].push_back(ei);
  }

  AbpBuilder b(p.num_vars(), F);
  for (int k = 0; k <= L + 1; ++k) b.AddLayer();
  // copy[i][k]: node for state i on boundary k, or -1.
  std::vector<std::vector<int>> copy(states.size(), std::vector<int>(L + 1, -1));
  for (int k = 0; k <= L; ++k) {
    for (size_t i = 0; i < states.size(); ++i) {
      if (first_read[states[i]] < k) {
        copy[i][k] = b.AddNode(k);
      }
    }
  }
  const int sink = b.AddNode(L + 1);
  for (int k = 0; k < L; ++k) {
    for (size_t i = 0; i < states.size(); ++i) {
      if (copy[i][k] < 0) continue;
      b.AddConstEdge(copy[i][k], copy[i][k + 1], 1);
      for (int ei : reads_at[k]) {
        const AbpEdge& e = p.edges()[ei];
        const uint64_t c = closure[i][e.from];
        if (c != 0) b.AddEdge(copy[i][k], copy[state_index[e.to]][k + 1], e.var, F.Mul(c, e.coeff));
      }
    }
  }
  for (size_t i = 0; i < states.size(); ++i) {
    if (copy[i][L] >= 0) b.AddConstEdge(copy[i][L], sink, closure[i][p.sink()]);
  }
  return Prune(b.Build());
}

Abp OneOrderToRoabp(const Abp& abp, Direction direction) {
  std::vector<int> order(abp.num_vars());
  for (int i = 0; i < abp.num_vars(); ++i) order[i] = i;
  if (direction == Direction::kDescending) return StaggerToOrder(ReverseAbp(abp), order);
  return StaggerToOrder(abp, order);
}

Abp SumRoabps(const Abp& a, const Abp& b) {
  if (a.num_vars() != b.num_vars() || !(a.field() == b.field())) {
    throw Error(ErrorCode::kDimensionMismatch, "programs over different spaces");
  }
  const std::vector<int> va = LayerVars(a);
  const std::vector<int> vb = LayerVars(b);
  if (a.edges().empty()) return b;
  if (b.edges().empty()) return a;
  // Aligned from the source, the shorter program padded with constants.
  bool aligned = true;
  std::vector<int> layer_of_var(a.num_vars(), -1);
  for (size_t k = 0; k < std::max(va.size(), vb.size()) && aligned; ++k) {
    for (int v : {k < va.size() ? va[k] : AbpEdge::kConstant, k < vb.size() ? vb[k] : AbpEdge::kConstant}) {
      if (v == AbpEdge::kConstant) continue;
      const int seen = layer_of_var[v];
      if (seen != -1 && seen != static_cast<int>(k)) aligned = false;
      layer_of_var[v] = static_cast<int>(k);
    }
    if (k < va.size() && k < vb.size() && va[k] != AbpEdge::kConstant &&
        vb[k] != AbpEdge::kConstant && va[k] != vb[k]) {
      aligned = false;
    }
  }
  if (aligned) return GlueParallel(a, b);
  const std::vector<int> merged = MergeOrders(ReadOrder(va), ReadOrder(vb));
  return GlueParallel(StaggerToOrder(a, merged), StaggerToOrder(b, merged));
}

ConversionResult ConvertStrictInterval(const Abp& abp) {
  const IntervalCheck check = CheckStrictInterval(abp);
  if (!check.report.ok) {
    throw Error(ErrorCode::kInvalidModel, "not a strict-interval program: " + check.report.witness);
  }
  ConversionResult out{Abp(abp.num_vars(), abp.field(), {{0}, {1}}, {})};
  const NodeClassification cls = ClassifyNodes(abp);
  for (size_t v = 0; v < cls.tag.size(); ++v) {
    if (cls.neutral[v]) {
      ++out.neutral_nodes;
    } else if (cls.tag[v] == NodeTag::kAscending) {
      ++out.ascending_nodes;
    } else if (cls.tag[v] == NodeTag::kDescending) {
      ++out.descending_nodes;
    }
  }
  const AscDescSplit split = SplitAscDesc(abp);
  out.p1_size = split.ascending.size();
  out.p2_size = split.descending.size();
  out.roabp = Prune(SumRoabps(OneOrderToRoabp(split.ascending, Direction::kAscending),
                              OneOrderToRoabp(split.descending, Direction::kDescending)));
  return out;
}

}  // namespace boundread
