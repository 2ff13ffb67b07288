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

#ifndef BOUNDREAD_MODELS_ABP_H_
#define BOUNDREAD_MODELS_ABP_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boundread/core/field.h"
#include "boundread/core/multilinear.h"

namespace boundread {

// Edge label c (constant) or c * x_var. Zero-coefficient edges are dropped
// when an Abp is constructed.
struct AbpEdge {
  static constexpr int kConstant = -1;

  int from = 0;
  int to = 0;
  int var = kConstant;
  uint64_t coeff = 1;

  bool is_constant() const { return var == kConstant; }
  friend bool operator==(const AbpEdge&, const AbpEdge&) = default;
};

// Layered algebraic branching program. Nodes are 0..num_nodes()-1, each in
// exactly one layer; layer 0 is {source}, the last layer is {sink}, and every
// edge goes from layer k to layer k+1. Intermediate layers may be empty, in
// which case the program computes 0.
class Abp {
 public:
  static constexpr int kMaxVars = 64;

  // kInvalidModel on any structural violation.
  Abp(int n, const Field& field, std::vector<std::vector<int>> layers,
      std::vector<AbpEdge> edges);

  int num_vars() const { return n_; }
  const Field& field() const { return field_; }
  int num_nodes() const { return static_cast<int>(layer_of_.size()); }
  int num_layers() const { return static_cast<int>(layers_.size()); }
  const std::vector<std::vector<int>>& layers() const { return layers_; }
  int layer_of(int node) const { return layer_of_[node]; }
  const std::vector<AbpEdge>& edges() const { return edges_; }
  // Edge indices, in edge-list order.
  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  const std::vector<int>& in_edges(int node) const { return in_[node]; }
  int source() const { return layers_.front().front(); }
  int sink() const { return layers_.back().front(); }
  // Number of nodes.
  int size() const { return num_nodes(); }
  int width() const;

  // Nodes listed layer by layer; every edge goes forward in this order.
  std::vector<int> TopologicalOrder() const;

 private:
  int n_;
  Field field_;
  std::vector<std::vector<int>> layers_;
  std::vector<AbpEdge> edges_;
  std::vector<int> layer_of_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Incremental construction helper. Layers are created in order; node ids are
// assigned densely in creation order.
class AbpBuilder {
 public:
  AbpBuilder(int n, const Field& field) : n_(n), field_(field) {}

  int AddLayer();
  int AddNode(int layer);
  void AddEdge(int from, int to, int var, uint64_t coeff);
  void AddConstEdge(int from, int to, uint64_t coeff) {
    AddEdge(from, to, AbpEdge::kConstant, coeff);
  }
  int num_layers() const { return static_cast<int>(layers_.size()); }
  Abp Build() const;

 private:
  int n_;
  Field field_;
  int next_node_ = 0;
  std::vector<std::vector<int>> layers_;
  std::vector<AbpEdge> edges_;
};

// Per-node masks of variables on some s->v path (before) and some v->t path
// (after), over all paths regardless of usefulness.
struct ReachVars {
  std::vector<VarMask> before;
  std::vector<VarMask> after;
};
ReachVars ComputeReachVars(const Abp& abp);

// Nodes reachable from s and co-reachable to t.
std::vector<bool> UsefulNodes(const Abp& abp);

// Drops nodes off every s-t path and renumbers canonically (layer by layer,
// keeping relative order). With no s-t path the result is the two-layer
// program {s}, {t} without edges.
Abp Prune(const Abp& abp);

// Sum over s-t paths of edge-label products, computed layer by layer.
// kNonMultilinear if the program is not syntactically multilinear,
// kCapExceeded beyond the dense cap.
MultilinearPoly ExpandAbp(const Abp& abp);
uint64_t EvaluateAbp(const Abp& abp, std::span<const uint64_t> point);

// Multiplies every edge leaving the source by c.
Abp ScaleAbp(const Abp& abp, uint64_t c);

// Shares s and t between the two programs; the shorter one is extended by
// constant-1 edges just before t. Computes f + g.
Abp GlueParallel(const Abp& a, const Abp& b);

// Canonical ordering, useful for golden comparisons.
std::string AbpSummary(const Abp& abp);

}  // namespace boundread

#endif  // BOUNDREAD_MODELS_ABP_H_
