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

#include "boundread/hardpoly/random_models.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "boundread/core/error.h"
#include "boundread/core/rng.h"

namespace boundread {
namespace {

void RequirePositive(int value, const char* what) {
  if (value <= 0) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be positive");
  }
}

std::vector<int> Iota(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Splits `total` into `parts` positive amounts.
std::vector<int> PositiveSplit(int total, int parts, SplitMix64& rng) {
  std::vector<int> out(parts, 1);
  for (int i = parts; i < total; ++i) ++out[rng.Uniform(parts)];
  return out;
}

// One-ordered part: `layer_nodes` middle layers, edge layer k reading from
// ranges[k] (possibly empty, then constants only).
Abp OneOrderedPart(int n, const Field& field, const std::vector<int>& layer_nodes,
                   const std::vector<std::vector<int>>& ranges, SplitMix64& rng) {
  AbpBuilder b(n, field);
  const int middle = static_cast<int>(layer_nodes.size());
  for (int k = 0; k <= middle + 1; ++k) b.AddLayer();
  std::vector<std::vector<int>> nodes(middle + 2);
  nodes[0].push_back(b.AddNode(0));
  for (int k = 1; k <= middle; ++k) {
    for (int i = 0; i < layer_nodes[k - 1]; ++i) nodes[k].push_back(b.AddNode(k));
  }
  nodes[middle + 1].push_back(b.AddNode(middle + 1));
  for (int k = 0; k <= middle; ++k) {
    const std::vector<int>& range = ranges[k];
    auto add = [&](int u, int v) {
      const uint64_t c = rng.NonZeroFieldValue(field);
      if (!range.empty() && (rng.Uniform(4) != 0)) {
        b.AddEdge(u, v, range[rng.Uniform(range.size())], c);
      } else {
        b.AddConstEdge(u, v, c);
      }
    };
    std::vector<bool> has_in(nodes[k + 1].size(), false);
    for (int u : nodes[k]) {
      bool has_out = false;
      for (size_t j = 0; j < nodes[k + 1].size(); ++j) {
        if (rng.Coin()) {
          add(u, nodes[k + 1][j]);
          has_in[j] = has_out = true;
        }
      }
      if (!has_out) {
        const size_t j = rng.Uniform(nodes[k + 1].size());
        add(u, nodes[k + 1][j]);
        has_in[j] = true;
      }
    }
    for (size_t j = 0; j < nodes[k + 1].size(); ++j) {
      if (!has_in[j]) add(nodes[k][rng.Uniform(nodes[k].size())], nodes[k + 1][j]);
    }
  }
  return b.Build();
}

// Cuts [0, n) into `parts` consecutive, possibly empty, ranges.
std::vector<std::vector<int>> CutRanges(int n, int parts, SplitMix64& rng) {
  std::vector<int> cuts;
  for (int i = 0; i + 1 < parts; ++i) cuts.push_back(static_cast<int>(rng.Uniform(n + 1)));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(n);
  std::vector<std::vector<int>> out(parts);
  for (int p = 0; p < parts; ++p) {
    for (int v = cuts[p]; v < cuts[p + 1]; ++v) out[p].push_back(v);
  }
  return out;
}

Gate IntervalGate(int lo, int hi, int budget, const Field& field, SplitMix64& rng) {
  if (budget < 3) {
    if (lo > hi) return Gate::Constant(rng.NonZeroFieldValue(field));
    return Gate::Variable(lo + static_cast<int>(rng.Uniform(hi - lo + 1)));
  }
  // Children sizes are odd and sum to budget - 1.
  const int half = (budget - 1) / 2;
  const int left = 2 * static_cast<int>(rng.Uniform(half)) + 1;
  const int right = budget - 1 - left;
  if (rng.Coin()) {
    int l1 = lo, h1 = hi, l2 = lo, h2 = hi;
    if (lo <= hi) {
      auto sub = [&](int& a, int& b) {
        a = lo + static_cast<int>(rng.Uniform(hi - lo + 1));
        b = a + static_cast<int>(rng.Uniform(hi - a + 1));
      };
      sub(l1, h1);
      sub(l2, h2);
    }
    return Gate::Sum({IntervalGate(l1, h1, left, field, rng),
                      IntervalGate(l2, h2, right, field, rng)});
  }
  // Product: [lo, mid] and [mid + 1, hi], either possibly empty.
  const int mid = lo <= hi ? lo - 1 + static_cast<int>(rng.Uniform(hi - lo + 2)) : hi;
  return Gate::Product({IntervalGate(lo, mid, left, field, rng),
                        IntervalGate(mid + 1, hi, right, field, rng)});
}

}  // namespace

Formula RandomRof(int n, uint64_t seed, const Field& field) {
  RequirePositive(n, "n");
  SplitMix64 rng(seed);
  // Remy: node 0 is the root; internal nodes have two children.
  struct Node {
    int parent = -1;
    int child[2] = {-1, -1};
  };
  std::vector<Node> tree(1);
  int root = 0;
  for (int leaves = 1; leaves < n; ++leaves) {
    const int target = static_cast<int>(rng.Uniform(tree.size()));
    const bool leaf_left = rng.Coin();
    const int internal = static_cast<int>(tree.size());
    const int leaf = internal + 1;
    tree.resize(tree.size() + 2);
    const int parent = tree[target].parent;
    tree[internal].parent = parent;
    if (parent == -1) {
      root = internal;
    } else {
      tree[parent].child[tree[parent].child[0] == target ? 0 : 1] = internal;
    }
    tree[internal].child[leaf_left ? 0 : 1] = leaf;
    tree[internal].child[leaf_left ? 1 : 0] = target;
    tree[target].parent = internal;
    tree[leaf].parent = internal;
  }
  std::vector<int> vars = Iota(n);
  rng.Shuffle(std::span<int>(vars));
  int next_leaf = 0;
  auto build = [&](auto&& self, int v) -> Gate {
    if (tree[v].child[0] == -1) return Gate::Variable(vars[next_leaf++]);
    const bool sum = rng.Coin();
    Gate l = self(self, tree[v].child[0]);
    Gate r = self(self, tree[v].child[1]);
    return sum ? Gate::Sum({std::move(l), std::move(r)})
               : Gate::Product({std::move(l), std::move(r)});
  };
  return Formula(n, field, build(build, root));
}

Abp RandomRoabpInOrder(std::span<const int> order, int n, int width, uint64_t seed,
                       const Field& field) {
  RequirePositive(width, "width");
  if (order.empty()) throw Error(ErrorCode::kInvalidArgument, "empty read order");
  SplitMix64 rng(seed);
  const int len = static_cast<int>(order.size());
  AbpBuilder b(n, field);
  for (int k = 0; k <= len; ++k) b.AddLayer();
  std::vector<std::vector<int>> nodes(len + 1);
  nodes[0].push_back(b.AddNode(0));
  for (int k = 1; k < len; ++k) {
    for (int i = 0; i < width; ++i) nodes[k].push_back(b.AddNode(k));
  }
  nodes[len].push_back(b.AddNode(len));
  for (int k = 0; k < len; ++k) {
    for (int u : nodes[k]) {
      for (int v : nodes[k + 1]) {
        if (rng.Coin()) b.AddEdge(u, v, order[k], rng.NonZeroFieldValue(field));
        if (rng.Coin()) b.AddConstEdge(u, v, rng.NonZeroFieldValue(field));
      }
    }
  }
  return Prune(b.Build());
}

Abp RandomRoabp(int n, int width, uint64_t seed, const Field& field) {
  RequirePositive(n, "n");
  std::vector<int> order = Iota(n);
  SplitMix64 rng(seed);
  rng.Shuffle(std::span<int>(order));
  return RandomRoabpInOrder(order, n, width, rng.Next(), field);
}

Formula RandomIntervalFormula(int n, int size, uint64_t seed, const Field& field) {
  RequirePositive(n, "n");
  RequirePositive(size, "size");
  SplitMix64 rng(seed);
  const int budget = size % 2 == 0 ? size - 1 : size;
  return Formula(n, field, IntervalGate(0, n - 1, std::max(budget, 1), field, rng));
}

Abp RandomStrictIntervalAbp(int n, int size, uint64_t seed, const Field& field) {
  RequirePositive(n, "n");
  if (size < 4) throw Error(ErrorCode::kInvalidArgument, "strict-interval programs need size >= 4");
  SplitMix64 rng(seed);
  // Interior nodes: both parts plus the constant chain that pads the
  // shallower part up to the depth of the other when they are glued.
  const int interior = size - 2;
  const int cap = std::max(1, std::min(n + 1, interior / 2));
  const int asc_layers = 1 + static_cast<int>(rng.Uniform(cap));
  const int desc_layers = 1 + static_cast<int>(rng.Uniform(cap));
  const int spare = interior - asc_layers - desc_layers - std::abs(asc_layers - desc_layers);
  const int asc_extra = static_cast<int>(rng.Uniform(spare + 1));
  auto make_part = [&](int budget, int layers, bool descending) {
    std::vector<std::vector<int>> ranges = CutRanges(n, layers + 1, rng);
    if (descending) std::reverse(ranges.begin(), ranges.end());
    return OneOrderedPart(n, field, PositiveSplit(budget, layers, rng), ranges, rng);
  };
  const Abp asc = make_part(asc_layers + asc_extra, asc_layers, false);
  const Abp desc = make_part(desc_layers + spare - asc_extra, desc_layers, true);
  return Prune(GlueParallel(asc, desc));
}

}  // namespace boundread
