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

#include "boundread/models/validators.h"

#include <algorithm>
#include <bit>

namespace boundread {
namespace {

std::string Describe(const Gate& g, size_t id) {
  std::string infix = g.ToInfix();
  if (infix.size() > 80) infix = infix.substr(0, 77) + "...";
  return "gate #" + std::to_string(id) + " " + infix;
}

// Pairwise-disjointness of product children; returns the offending id.
template <typename Pred>
StructReport FirstFailingProduct(const Formula& formula, Pred children_ok) {
  StructReport report;
  VisitPreorder(formula.root(), [&](const Gate& g, size_t id) {
    if (report.ok && g.is_product() && !children_ok(g)) {
      report = StructReport::Fail(Describe(g, id));
    }
  });
  return report;
}

}  // namespace

Span Span::Of(VarMask mask) {
  if (mask == 0) return {};
  return {std::countr_zero(mask), 63 - std::countl_zero(mask)};
}

std::string Span::ToString() const {
  if (empty()) return "[]";
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

bool Disjoint(const Span& a, const Span& b) {
  return a.empty() || b.empty() || a.hi < b.lo || b.hi < a.lo;
}

bool Precedes(const Span& a, const Span& b) { return a.hi <= b.lo; }

StructReport CheckSyntacticMultilinear(const Formula& formula) {
  return FirstFailingProduct(formula, [](const Gate& g) {
    VarMask seen = 0;
    for (const Gate& c : g.children()) {
      if (c.vars() & seen) return false;
      seen |= c.vars();
    }
    return true;
  });
}

StructReport CheckSyntacticMultilinear(const Abp& abp) {
  const std::vector<bool> useful = UsefulNodes(abp);
  const ReachVars rv = ComputeReachVars(abp);
  for (const AbpEdge& e : abp.edges()) {
    if (e.is_constant() || !useful[e.from] || !useful[e.to]) continue;
    if ((rv.before[e.from] >> e.var) & 1) {
      return StructReport::Fail("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                " reads x" + std::to_string(e.var) +
                                ", already read on a path from s to " + std::to_string(e.from));
    }
  }
  return StructReport::Pass();
}

std::vector<int> ReadCounts(const Formula& formula) {
  std::vector<int> counts(formula.num_vars(), 0);
  VisitPreorder(formula.root(), [&](const Gate& g, size_t) {
    if (g.is_variable()) ++counts[g.variable()];
  });
  return counts;
}

int ReadK(const Formula& formula) {
  const std::vector<int> counts = ReadCounts(formula);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

StructReport CheckRof(const Formula& formula) {
  const std::vector<int> counts = ReadCounts(formula);
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 1) {
      return StructReport::Fail("x" + std::to_string(i) + " labels " + std::to_string(counts[i]) +
                                " leaves");
    }
  }
  return StructReport::Pass();
}

RoabpCheck CheckObliviousRoabp(const Abp& abp) {
  const std::vector<bool> useful = UsefulNodes(abp);
  std::vector<int> layer_var(abp.num_layers(), AbpEdge::kConstant);
  std::vector<int> var_layer(abp.num_vars(), -1);
  for (const AbpEdge& e : abp.edges()) {
    if (e.is_constant() || !useful[e.from] || !useful[e.to]) continue;
    const int k = abp.layer_of(e.from);
    if (layer_var[k] != AbpEdge::kConstant && layer_var[k] != e.var) {
      return {StructReport::Fail("layer " + std::to_string(k) + " reads x" +
                                 std::to_string(layer_var[k]) + " and x" + std::to_string(e.var)),
              {}};
    }
    if (var_layer[e.var] != -1 && var_layer[e.var] != k) {
      return {StructReport::Fail("x" + std::to_string(e.var) + " is read in layers " +
                                 std::to_string(var_layer[e.var]) + " and " + std::to_string(k)),
              {}};
    }
    layer_var[k] = e.var;
    var_layer[e.var] = k;
  }
  RoabpCheck out;
  for (int v : layer_var) {
    if (v != AbpEdge::kConstant) out.order.push_back(v);
  }
  return out;
}

PairVars ComputePairVars(const Abp& abp) {
  const int N = abp.num_nodes();
  const std::vector<bool> useful = UsefulNodes(abp);
  const std::vector<int> order = abp.TopologicalOrder();
  PairVars pv{std::vector<std::vector<VarMask>>(N, std::vector<VarMask>(N, 0)),
              std::vector<std::vector<char>>(N, std::vector<char>(N, 0))};
  for (int u = 0; u < N; ++u) {
    if (!useful[u]) continue;
    auto& vars = pv.vars[u];
    auto& reach = pv.reach[u];
    reach[u] = 1;
    for (int v : order) {
      if (!reach[v]) continue;
      for (int ei : abp.out_edges(v)) {
        const AbpEdge& e = abp.edges()[ei];
        if (!useful[e.to]) continue;
        reach[e.to] = 1;
        vars[e.to] |= vars[v] | (e.is_constant() ? 0 : VarMask{1} << e.var);
      }
    }
  }
  return pv;
}

IntervalCheck CheckStrictInterval(const Abp& abp) {
  IntervalCheck out;
  out.report = CheckSyntacticMultilinear(abp);
  if (!out.report.ok) return out;
  out.pairs = ComputePairVars(abp);
  const int N = abp.num_nodes();
  const std::vector<bool> useful = UsefulNodes(abp);
  const auto& vars = out.pairs.vars;
  const auto& reach = out.pairs.reach;
  for (int v = 0; v < N; ++v) {
    if (!useful[v]) continue;
    // Incoming spans sorted by lo, with the running max of hi, answer "does
    // any span X_uv overlap span(X_vw)" by one binary search per w.
    std::vector<std::pair<Span, int>> in;
    for (int u = 0; u < N; ++u) {
      if (u == v || !reach[u][v]) continue;
      const Span s = Span::Of(vars[u][v]);
      if (!s.empty()) in.push_back({s, u});
    }
    if (in.empty()) continue;
    std::sort(in.begin(), in.end(), [](const auto& a, const auto& b) {
      return a.first.lo != b.first.lo ? a.first.lo < b.first.lo : a.second < b.second;
    });
    std::vector<int> best(in.size());
    for (size_t i = 0; i < in.size(); ++i) {
      best[i] = (i == 0 || in[i].first.hi > in[best[i - 1]].first.hi) ? static_cast<int>(i)
                                                                       : best[i - 1];
    }
    for (int w = 0; w < N; ++w) {
      if (w == v || !reach[v][w]) continue;
      const Span b = Span::Of(vars[v][w]);
      if (b.empty()) continue;
      auto it = std::upper_bound(in.begin(), in.end(), b.hi,
                                 [](int hi, const auto& a) { return hi < a.first.lo; });
      if (it == in.begin()) continue;
      const auto& [a, u] = in[best[it - in.begin() - 1]];
      if (a.hi >= b.lo) {
        out.report = StructReport::Fail(
            "triple (u,v,w)=(" + std::to_string(u) + "," + std::to_string(v) + "," +
            std::to_string(w) + "): span " + a.ToString() + " of X_uv overlaps span " +
            b.ToString() + " of X_vw");
        return out;
      }
    }
  }
  return out;
}

Span GateSpan(const Gate& gate) { return Span::Of(gate.vars()); }

StructReport CheckIntervalFormula(const Formula& formula) {
  return FirstFailingProduct(formula, [](const Gate& g) {
    const auto& ch = g.children();
    for (size_t i = 0; i < ch.size(); ++i) {
      for (size_t j = i + 1; j < ch.size(); ++j) {
        if (!Disjoint(GateSpan(ch[i]), GateSpan(ch[j]))) return false;
      }
    }
    return true;
  });
}

}  // namespace boundread
