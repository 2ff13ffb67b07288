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

#ifndef BOUNDREAD_MODELS_VALIDATORS_H_
#define BOUNDREAD_MODELS_VALIDATORS_H_

#include <string>
#include <vector>

#include "boundread/core/multilinear.h"
#include "boundread/models/abp.h"
#include "boundread/models/formula.h"

namespace boundread {

// Verdict plus a human-readable witness, present iff the verdict is false.
struct StructReport {
  bool ok = true;
  std::string witness;

  static StructReport Pass() { return {}; }
  static StructReport Fail(std::string witness) { return {false, std::move(witness)}; }
};

// Closed index interval [lo, hi]; lo > hi encodes the empty span.
struct Span {
  int lo = 1;
  int hi = 0;

  bool empty() const { return lo > hi; }
  static Span Of(VarMask mask);
  std::string ToString() const;
  friend bool operator==(const Span&, const Span&) = default;
};
// Empty spans are disjoint from everything.
bool Disjoint(const Span& a, const Span& b);
// I <= J iff max(I) <= min(J), for nonempty spans.
bool Precedes(const Span& a, const Span& b);

StructReport CheckSyntacticMultilinear(const Formula& formula);
StructReport CheckSyntacticMultilinear(const Abp& abp);

// Number of leaves labelled by each variable.
std::vector<int> ReadCounts(const Formula& formula);
int ReadK(const Formula& formula);
StructReport CheckRof(const Formula& formula);

struct RoabpCheck {
  StructReport report;
  // Read order sigma, constant-only layers skipped. Empty unless ok.
  std::vector<int> order;
};
RoabpCheck CheckObliviousRoabp(const Abp& abp);

// X_uv for every pair of useful nodes: the variables on some u->v path.
// reach[u][v] is set iff v is reachable from u (u == v included).
struct PairVars {
  std::vector<std::vector<VarMask>> vars;
  std::vector<std::vector<char>> reach;
};
PairVars ComputePairVars(const Abp& abp);

struct IntervalCheck {
  StructReport report;
  PairVars pairs;
};
// Identity order. Fails if the program is not syntactically multilinear or
// some u->v->w has overlapping spans of X_uv and X_vw; the witness names the
// triple.
IntervalCheck CheckStrictInterval(const Abp& abp);

// Bottom-up spans; product children must have pairwise disjoint spans.
StructReport CheckIntervalFormula(const Formula& formula);
Span GateSpan(const Gate& gate);

}  // namespace boundread

#endif  // BOUNDREAD_MODELS_VALIDATORS_H_
