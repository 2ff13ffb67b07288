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

#include "boundread/hardpoly/dmpy.h"

#include <algorithm>
#include <set>
#include <string>

#include "boundread/core/error.h"
#include "boundread/core/rng.h"

namespace boundread {
namespace {

constexpr int kMaxArcPoints = 16;
constexpr ArcMove kMoves[] = {ArcMove::kLeft, ArcMove::kMiddle, ArcMove::kRight};

void RequireArcN(int n) {
  if (n < 2 || n % 2 != 0 || n > kMaxArcPoints) {
    throw Error(ErrorCode::kInvalidArgument,
                "arc pairings need an even n in [2, 16], got " + std::to_string(n));
  }
}

}  // namespace

std::vector<int> ArcEnumeration::Multiplicities() const {
  std::vector<int> out(pairings.size(), 0);
  for (const auto& s : sequences) ++out[s.pairing];
  return out;
}

ArcEnumeration EnumerateArcPairings(int n) {
  RequireArcN(n);
  struct Raw {
    std::vector<ArcMove> moves;
    Pairing pairing;
  };
  std::vector<Raw> raw;
  std::vector<ArcMove> moves;
  std::vector<std::pair<int, int>> pairs{{0, 1}};
  auto dfs = [&](auto&& self, int l, int r) -> void {
    if (static_cast<int>(pairs.size()) == n / 2) {
      raw.push_back({moves, Pairing(n, pairs)});
      return;
    }
    for (ArcMove m : kMoves) {
      int nl = l, nr = r;
      pairs.push_back(ApplyArcMove(n, m, nl, nr));
      moves.push_back(m);
      self(self, nl, nr);
      moves.pop_back();
      pairs.pop_back();
    }
  };
  dfs(dfs, 0, 1);
  std::set<Pairing> distinct;
  for (const auto& r : raw) distinct.insert(r.pairing);
  ArcEnumeration out;
  out.pairings.assign(distinct.begin(), distinct.end());
  for (auto& r : raw) {
    const int idx = static_cast<int>(
        std::lower_bound(out.pairings.begin(), out.pairings.end(), r.pairing) -
        out.pairings.begin());
    out.sequences.push_back({std::move(r.moves), idx});
  }
  return out;
}

uint64_t LambdaAssignment::Lambda(const Pairing& p) const {
  auto it = lambda_.find(p);
  if (it == lambda_.end()) throw Error(ErrorCode::kInvalidArgument, "missing lambda value");
  return it->second;
}

uint64_t LambdaAssignment::Tag(const TagKey& k) const {
  auto it = tags_.find(k);
  if (it == tags_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "missing tag for step " + std::to_string(k.step) +
                                                 ", start " + std::to_string(k.start));
  }
  return it->second;
}

std::vector<TagKey> LambdaAssignment::TransitionKeys(int n) {
  RequireArcN(n);
  std::vector<TagKey> keys;
  // After `step` steps the arc start is 0, -1, ..., -2(step-1) mod n.
  for (int step = 1; step < n / 2; ++step) {
    std::set<int> starts;
    for (int d = 0; d <= 2 * (step - 1); ++d) starts.insert(((-d) % n + n) % n);
    for (int start : starts) {
      for (ArcMove m : kMoves) keys.push_back({step, start, m});
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

LambdaAssignment LambdaAssignment::Uniform(int n, uint64_t value) {
  LambdaAssignment out;
  for (const Pairing& p : EnumerateArcPairings(n).pairings) out.SetLambda(p, value);
  for (const TagKey& k : TransitionKeys(n)) out.SetTag(k, value);
  return out;
}

LambdaAssignment LambdaAssignment::Random(int n, const Field& field, uint64_t seed) {
  SplitMix64 rng(seed);
  LambdaAssignment out;
  for (const Pairing& p : EnumerateArcPairings(n).pairings) {
    out.SetLambda(p, rng.NonZeroFieldValue(field));
  }
  for (const TagKey& k : TransitionKeys(n)) out.SetTag(k, rng.NonZeroFieldValue(field));
  return out;
}

MultilinearPoly PairingMonomial(const Pairing& p, const Field& field) {
  const int n = p.num_vars();
  MultilinearPoly out = MultilinearPoly::Constant(n, field, 1);
  for (auto [a, b] : p.pairs()) {
    out = Multiply(out, Add(MultilinearPoly::Variable(n, field, a),
                            MultilinearPoly::Variable(n, field, b)));
  }
  return out;
}

MultilinearPoly GenerateDmpy(int n, const Field& field, const LambdaAssignment& lambda) {
  PolyAccumulator acc(n, field);
  for (const Pairing& p : EnumerateArcPairings(n).pairings) {
    acc.AddPoly(PairingMonomial(p, field), lambda.Lambda(p));
  }
  return acc.Build();
}

Abp GenerateDmpySmAbp(int n, const Field& field, const LambdaAssignment& tags) {
  RequireArcN(n);
  const int steps = n / 2;
  AbpBuilder b(n, field);
  for (int k = 0; k <= steps; ++k) b.AddLayer();
  const int s = b.AddNode(0);
  // node_at[k][start] for the arc covering 2k points.
  std::vector<std::vector<int>> node_at(steps + 1, std::vector<int>(n, -1));
  for (int k = 1; k < steps; ++k) {
    for (const TagKey& key : LambdaAssignment::TransitionKeys(n)) {
      if (key.step == k && node_at[k][key.start] == -1) node_at[k][key.start] = b.AddNode(k);
    }
  }
  const int t = b.AddNode(steps);
  auto target = [&](int k, int start) { return k == steps ? t : node_at[k][start]; };
  const int first = target(1, 0);
  b.AddEdge(s, first, 0, 1);
  b.AddEdge(s, first, 1, 1);
  for (const TagKey& key : LambdaAssignment::TransitionKeys(n)) {
    int l = key.start, r = (key.start + 2 * key.step - 1) % n;
    const auto [x, y] = ApplyArcMove(n, key.move, l, r);
    const int from = node_at[key.step][key.start];
    const int to = target(key.step + 1, l);
    const uint64_t tag = tags.Tag(key);
    b.AddEdge(from, to, x, tag);
    b.AddEdge(from, to, y, tag);
  }
  return b.Build();
}

}  // namespace boundread
