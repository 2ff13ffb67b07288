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

#ifndef BOUNDREAD_TRANSFORMS_ROABP_CONVERT_H_
#define BOUNDREAD_TRANSFORMS_ROABP_CONVERT_H_

#include <span>
#include <vector>

#include "boundread/models/abp.h"

namespace boundread {

enum class NodeTag { kTerminal, kAscending, kDescending };
enum class Direction { kAscending, kDescending };

// Per-node tags from the spans of X_sv and X_vt. A node with an empty span
// on either side is tagged ascending and also marked neutral: it belongs to
// both halves of the split.
struct NodeClassification {
  std::vector<NodeTag> tag;
  std::vector<bool> neutral;
  // Useful nodes only; others are left kTerminal.
  std::vector<VarMask> before;  // X_sv
  std::vector<VarMask> after;   // X_vt
};

// kMixedClassification if some node's spans overlap (impossible on a valid
// strict-interval program).
NodeClassification ClassifyNodes(const Abp& abp);

// P = P1 + P2. P1 keeps ascending and neutral nodes. P2 keeps descending
// nodes and the neutral nodes with exactly one empty side, minus the edges
// that would let a path skip every descending node. Both are pruned.
struct AscDescSplit {
  Abp ascending;
  Abp descending;
};
AscDescSplit SplitAscDesc(const Abp& abp);

// Reversed edges, reversed layers, s and t swapped; node ids kept.
Abp ReverseAbp(const Abp& abp);

// ROABP reading `order` (a list of distinct variables that covers every
// variable the program reads), one layer per entry, then a constant layer
// into the sink. The input must be one-ordered for `order`: along every
// path, variables are read in increasing order position
// (kMixedClassification otherwise; kOrderMismatch if a read variable is
// missing from the order).
Abp StaggerToOrder(const Abp& abp, std::span<const int> order);

// Descending inputs are reversed first; the output reads x_0..x_{n-1}.
Abp OneOrderToRoabp(const Abp& abp, Direction direction);

// f1 + f2 as one ROABP. When the layers already agree (same count, each
// layer reads the same variable or only constants on one side) the programs
// are glued at s and t; otherwise both are restaggered to a merged order.
// kNotRoabp if an input is not a ROABP, kOrderMismatch if the read orders
// cannot be merged.
Abp SumRoabps(const Abp& a, const Abp& b);

struct ConversionResult {
  Abp roabp;
  int ascending_nodes = 0;
  int descending_nodes = 0;
  int neutral_nodes = 0;
  int p1_size = 0;
  int p2_size = 0;
};

// kInvalidModel unless the input passes the strict-interval check.
ConversionResult ConvertStrictInterval(const Abp& abp);
inline Abp StrictIntervalToRoabp(const Abp& abp) { return ConvertStrictInterval(abp).roabp; }

}  // namespace boundread

#endif  // BOUNDREAD_TRANSFORMS_ROABP_CONVERT_H_
