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

#include "boundread/cli/experiments.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "boundread/cli/report.h"
#include "boundread/core/error.h"
#include "boundread/core/rng.h"
#include "boundread/hardpoly/block_structure.h"
#include "boundread/hardpoly/dmpy.h"
#include "boundread/hardpoly/random_models.h"
#include "boundread/hardpoly/ry.h"
#include "boundread/models/census.h"
#include "boundread/models/validators.h"
#include "boundread/partitions/sampling.h"
#include "boundread/pit/pit.h"
#include "boundread/rank/pd_matrix.h"
#include "boundread/transforms/depth_reduction.h"
#include "boundread/transforms/roabp_convert.h"

namespace boundread::cli {
namespace {

using nlohmann::json;

// Seed index for draws shared by all trials (a fixed W or lambda).
constexpr uint64_t kSharedIndex = ~uint64_t{0};

class Params {
 public:
  explicit Params(const json& given) : given_(given) {
    if (!given_.is_object()) throw Error(ErrorCode::kInvalidArgument, "params must be an object");
  }

  int64_t Get(const std::string& key, int64_t def, int64_t lo, int64_t hi) {
    int64_t v = def;
    if (given_.contains(key)) {
      const json& j = given_.at(key);
      if (!j.is_number_integer()) throw Error(ErrorCode::kInvalidArgument, key + " must be an integer");
      v = j.get<int64_t>();
    }
    if (v < lo || v > hi) {
      throw Error(ErrorCode::kInvalidArgument, key + " must lie in [" + std::to_string(lo) + ", " +
                                                   std::to_string(hi) + "]");
    }
    used_[key] = v;
    return v;
  }

  void Finish() const {
    for (const auto& [k, _] : given_.items())
      if (!used_.contains(k)) throw Error(ErrorCode::kInvalidArgument, "unknown parameter " + k);
  }

  const json& used() const { return used_; }

 private:
  json given_;
  json used_ = json::object();
};

struct Outcome {
  json trials = json::array();
  json summary = json::object();
  bool ok = true;
};

using Runner = std::function<Outcome(Params&, const ExperimentConfig&, const Field&)>;

json RunTrials(size_t count, int threads, const std::function<json(size_t)>& trial) {
  std::vector<json> records(count);
  ParallelFor(count, threads, [&](size_t i) { records[i] = trial(i); });
  json out = json::array();
  for (auto& r : records) out.push_back(std::move(r));
  return out;
}

int CountFailures(const json& trials) {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(),
                                        [](const json& t) { return !t.at("ok").get<bool>(); }));
}

std::vector<int> Iota(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

Outcome PryFullRank(Params& p, const ExperimentConfig& c, const Field& F) {
  const int n = p.Get("n", 8, 2, 24), r = p.Get("r", 4, 2, 24);
  const int trials = p.Get("trials", 20, 1, 100000), draws = p.Get("draws", 3, 1, 1000);
  const int reseeds = p.Get("reseeds", 1, 0, 100);
  p.Finish();
  const BlockStructure bs(n, r);
  const int full = 1 << (n / 2);
  Outcome out;
  out.trials = RunTrials(trials, c.threads, [&](size_t i) {
    SplitMix64 rng(DeriveSeed(c.seed, i));
    const Partition phi = SampleDb(bs, rng.Next());
    json ranks = json::array();
    int used = 0;
    bool ok = true;
    for (int d = 0; d < draws; ++d) {
      int rank = 0;
      for (int attempt = 0; attempt <= reseeds; ++attempt) {
        if (attempt > 0) ++used;
        const WAssignment w = WAssignment::RandomForBlocks(bs, F, rng.Next());
        rank = RankOf(GeneratePry(bs, F, w), phi);
        if (rank == full) break;
      }
      ranks.push_back(rank);
      ok = ok && rank == full;
    }
    return json{{"trial", i}, {"Y", phi.y_indices()}, {"ranks", ranks}, {"reseeds", used}, {"ok", ok}};
  });
  int min_rank = full, reseeds_used = 0;
  for (const auto& t : out.trials) {
    for (int rank : t.at("ranks")) min_rank = std::min(min_rank, rank);
    reseeds_used += t.at("reseeds").get<int>();
  }
  const int failures = CountFailures(out.trials);
  out.summary = {{"expected_rank", full}, {"min_rank", min_rank}, {"reseeds_used", reseeds_used},
                 {"failures", failures}};
  out.ok = failures == 0;
  return out;
}

Outcome RyAllPartitions(Params& p, const ExperimentConfig& c, const Field& F) {
  const int m = p.Get("m", 4, 2, 16);
  p.Finish();
  if (m % 2) throw Error(ErrorCode::kInvalidArgument, "m must be even");
  const std::vector<int> vars = Iota(m);
  const WAssignment w = WAssignment::Random(vars, F, DeriveSeed(c.seed, kSharedIndex));
  const MultilinearPoly f = GenerateRy(m, F, vars, w);
  std::vector<VarMask> masks;
  for (VarMask y = 0; y < (VarMask{1} << m); ++y)
    if (std::popcount(y) == m / 2) masks.push_back(y);
  const int full = 1 << (m / 2);
  Outcome out;
  out.trials = RunTrials(masks.size(), c.threads, [&](size_t i) {
    const Partition phi(m, masks[i]);
    const int rank = RankOf(f, phi);
    return json{{"partition", i}, {"Y", phi.y_indices()}, {"rank", rank}, {"ok", rank == full}};
  });
  int min_rank = full;
  for (const auto& t : out.trials) min_rank = std::min(min_rank, t.at("rank").get<int>());
  const int failures = CountFailures(out.trials);
  out.summary = {{"partitions", masks.size()}, {"expected_rank", full}, {"min_rank", min_rank},
                 {"failures", failures}};
  out.ok = failures == 0;
  return out;
}

Outcome DmpyFullRank(Params& p, const ExperimentConfig& c, const Field& F) {
  const int n = p.Get("n", 6, 2, 16), colorings = p.Get("colorings", 5, 1, 1000);
  const bool smabp = p.Get("smabp", 1, 0, 1) != 0;
  p.Finish();
  if (n % 2) throw Error(ErrorCode::kInvalidArgument, "n must be even");
  const ArcEnumeration arcs = EnumerateArcPairings(n);
  const LambdaAssignment lambda = LambdaAssignment::Random(n, F, DeriveSeed(c.seed, kSharedIndex));
  const MultilinearPoly f = GenerateDmpy(n, F, lambda);
  const MultilinearPoly g = smabp ? ExpandAbp(GenerateDmpySmAbp(n, F, lambda)) : f;
  const int full = 1 << (n / 2);
  Outcome out;
  out.trials = RunTrials(arcs.pairings.size(), c.threads, [&](size_t i) {
    SplitMix64 rng(DeriveSeed(c.seed, i));
    const Pairing& pairing = arcs.pairings[i];
    json dmpy_ranks = json::array(), abp_ranks = json::array();
    bool ok = true;
    for (int k = 0; k < colorings; ++k) {
      VarMask y = 0;
      for (const auto& [a, b] : pairing.pairs()) y |= VarMask{1} << (rng.Coin() ? a : b);
      const Partition phi(n, y);
      const int rf = RankOf(f, phi);
      dmpy_ranks.push_back(rf);
      ok = ok && rf == full;
      if (smabp) {
        const int rg = RankOf(g, phi);
        abp_ranks.push_back(rg);
        ok = ok && rg == full;
      }
    }
    json rec{{"pairing", i}, {"pairs", PairingToJson(pairing).at("pairs")}, {"dmpy_ranks", dmpy_ranks},
             {"ok", ok}};
    if (smabp) rec["smabp_ranks"] = abp_ranks;
    return rec;
  });
  const int failures = CountFailures(out.trials);
  out.summary = {{"pairings", arcs.pairings.size()}, {"sequences", arcs.sequences.size()},
                 {"expected_rank", full}, {"failures", failures}};
  out.ok = failures == 0;
  return out;
}

Outcome RofDeficit(Params& p, const ExperimentConfig& c, const Field& F) {
  const int n = p.Get("n", 16, 2, 24), r = p.Get("r", 4, 2, 24);
  const int trials = p.Get("trials", 100, 1, 100000);
  p.Finish();
  const BlockStructure bs(n, r);
  const int cap = 1 << (n / 2);
  Outcome out;
  out.trials = RunTrials(trials, c.threads, [&](size_t i) {
    SplitMix64 rng(DeriveSeed(c.seed, i));
    const Formula rof = RandomRof(n, rng.Next(), F);
    const Partition phi = SampleDb(bs, rng.Next());
    const int rank = RankOf(ExpandFormula(rof), phi);
    json rec{{"trial", i}, {"rank", rank}, {"size", rof.size()}, {"ok", rank <= cap}};
    rec["deficit"] = rank > 0 ? json(Round6(n / 2.0 - std::log2(double(rank)))) : json(nullptr);
    if (IsBinary(rof.root()))
      rec["census_log2_bound"] = Round6(CensusLog2Bound(TakeGateCensus(rof, phi)));
    return rec;
  });
  std::map<int, int> histogram;
  int max_rank = 0;
  double sum = 0;
  int counted = 0;
  for (const auto& t : out.trials) {
    max_rank = std::max(max_rank, t.at("rank").get<int>());
    if (t.at("deficit").is_null()) continue;
    const double d = t.at("deficit").get<double>();
    ++histogram[static_cast<int>(std::floor(d + 1e-9))];
    sum += d;
    ++counted;
  }
  json hist = json::array();
  for (const auto& [d, k] : histogram) hist.push_back({{"deficit_floor", d}, {"count", k}});
  const int violations = CountFailures(out.trials);
  out.summary = {{"rank_cap", cap},
                 {"max_rank", max_rank},
                 {"mean_deficit", counted ? Round6(sum / counted) : 0.0},
                 {"histogram", hist},
                 {"violations", violations}};
  out.ok = violations == 0;
  return out;
}

Outcome ConvertCorpus(Params& p, const ExperimentConfig& c, const Field& F) {
  const int trials = p.Get("trials", 100, 1, 100000), n_max = p.Get("n_max", 10, 2, 24);
  const int size_max = p.Get("size_max", 60, 4, 2000);
  p.Finish();
  Outcome out;
  out.trials = RunTrials(trials, c.threads, [&](size_t i) {
    SplitMix64 rng(DeriveSeed(c.seed, i));
    const int n = 2 + static_cast<int>(rng.Uniform(n_max - 1));
    const int target = 4 + static_cast<int>(rng.Uniform(size_max - 3));
    const Abp abp = RandomStrictIntervalAbp(n, target, rng.Next(), F);
    const ConversionResult conv = ConvertStrictInterval(abp);
    const bool roabp_ok = CheckObliviousRoabp(conv.roabp).report.ok;
    const bool equal = ExpandAbp(conv.roabp) == ExpandAbp(abp);
    const int bound = 2 * n * abp.size();
    const bool size_ok = conv.roabp.size() <= bound;
    return json{{"trial", i},
                {"n", n},
                {"size_in", abp.size()},
                {"size_out", conv.roabp.size()},
                {"size_bound", bound},
                {"width_out", conv.roabp.width()},
                {"ascending", conv.ascending_nodes},
                {"descending", conv.descending_nodes},
                {"neutral", conv.neutral_nodes},
                {"roabp_ok", roabp_ok},
                {"equal", equal},
                {"size_ok", size_ok},
                {"ok", roabp_ok && equal && size_ok}};
  });
  double max_ratio = 0;
  int mixed = 0;
  for (const auto& t : out.trials) {
    max_ratio = std::max(max_ratio, t.at("size_out").get<double>() /
                                        (t.at("n").get<double>() * t.at("size_in").get<double>()));
    mixed += t.at("ascending").get<int>() > 0 && t.at("descending").get<int>() > 0;
  }
  const int failures = CountFailures(out.trials);
  out.summary = {{"failures", failures}, {"max_size_over_nS", Round6(max_ratio)}, {"mixed", mixed}};
  out.ok = failures == 0;
  return out;
}

Outcome PitCorpus(Params& p, const ExperimentConfig& c, const Field& F) {
  const int roabps = p.Get("roabps", 200, 0, 100000), intervals = p.Get("intervals", 100, 0, 100000);
  const int zeros = p.Get("zeros", 50, 0, 200000), n_max = p.Get("n_max", 12, 2, 24);
  p.Finish();
  const int total = roabps + intervals;
  if (total == 0) throw Error(ErrorCode::kInvalidArgument, "empty corpus");
  if (zeros > total) throw Error(ErrorCode::kInvalidArgument, "zeros exceeds the corpus size");
  // Every stride-th instance is replaced by P + (-1)P.
  const int stride = zeros > 0 ? total / zeros : 0;
  Outcome out;
  out.trials = RunTrials(total, c.threads, [&](size_t i) {
    SplitMix64 rng(DeriveSeed(c.seed, i));
    const bool is_roabp = static_cast<int>(i) < roabps;
    const bool forced = stride > 0 && static_cast<int>(i % stride) == stride - 1;
    int n;
    Abp abp = [&] {
      if (is_roabp) {
        n = 1 + static_cast<int>(rng.Uniform(n_max));
        const int width = 1 + static_cast<int>(rng.Uniform(4));
        return RandomRoabp(n, width, rng.Next(), F);
      }
      n = 2 + static_cast<int>(rng.Uniform(n_max - 1));
      const int size = 4 + static_cast<int>(rng.Uniform(37));
      return RandomStrictIntervalAbp(n, size, rng.Next(), F);
    }();
    if (forced) abp = GlueParallel(abp, ScaleAbp(abp, F.Neg(1)));
    const PitResult r = is_roabp ? RoabpPit(abp) : StrictIntervalPit(abp);
    const MultilinearPoly f = ExpandAbp(abp);
    bool witness_ok = true;
    json rec{{"trial", i},
             {"kind", is_roabp ? "roabp" : "strict-interval"},
             {"n", n},
             {"size", abp.size()},
             {"forced_zero", forced},
             {"verdict", r.zero ? "zero" : "nonzero"},
             {"expected", f.is_zero() ? "zero" : "nonzero"},
             {"max_basis", r.max_basis}};
    if (!r.zero) {
      witness_ok = r.witness_coeff != 0 && f.coeff(r.witness_mask).value() == r.witness_coeff &&
                   EvaluateAbp(abp, r.witness_point) == r.witness_coeff;
      rec["witness_mask"] = r.witness_mask;
    }
    rec["witness_ok"] = witness_ok;
    rec["ok"] = witness_ok && r.zero == f.is_zero() && (!forced || r.zero);
    return rec;
  });
  int disagreements = 0, witness_failures = 0, zero_verdicts = 0, forced = 0;
  for (const auto& t : out.trials) {
    disagreements += t.at("verdict") != t.at("expected");
    witness_failures += !t.at("witness_ok").get<bool>();
    zero_verdicts += t.at("verdict") == "zero";
    forced += t.at("forced_zero").get<bool>();
  }
  out.summary = {{"instances", total},       {"forced_zero", forced},
                 {"zero_verdicts", zero_verdicts}, {"disagreements", disagreements},
                 {"witness_failures", witness_failures}, {"failures", CountFailures(out.trials)}};
  out.ok = CountFailures(out.trials) == 0;
  return out;
}

// h * (p + g) with h = x0, p = x1, g = x2 x3.
bool DepthFixtureOk(const Field& F) {
  const Formula f(4, F,
                  Gate::Product({Gate::Variable(0),
                                 Gate::Sum({Gate::Variable(1),
                                            Gate::Product({Gate::Variable(2), Gate::Variable(3)})})}));
  const Formula out = DepthReduceInterval(f);
  return CheckIntervalFormula(out).ok && ExpandFormula(out) == ExpandFormula(f);
}

Outcome DepthredCorpus(Params& p, const ExperimentConfig& c, const Field& F) {
  const int trials = p.Get("trials", 100, 1, 100000), size_max = p.Get("size_max", 100, 3, 400);
  const int n_max = p.Get("n_max", 16, 2, 24);
  p.Finish();
  Outcome out;
  out.trials = RunTrials(trials, c.threads, [&](size_t i) {
    SplitMix64 rng(DeriveSeed(c.seed, i));
    const int n = 2 + static_cast<int>(rng.Uniform(n_max - 1));
    const int target = 3 + static_cast<int>(rng.Uniform(size_max - 2));
    const Formula f = RandomIntervalFormula(n, target, rng.Next(), F);
    const Formula g = DepthReduceInterval(f);
    const double s = static_cast<double>(f.size());
    const double bound = 2.0 * std::log(s) / std::log(1.5) + 4.0;
    const bool interval_ok = CheckIntervalFormula(g).ok;
    const bool equal = ExpandFormula(g) == ExpandFormula(f);
    const bool depth_ok = g.depth() <= bound;
    json rec{{"trial", i},
             {"n", n},
             {"size_in", f.size()},
             {"depth_in", f.depth()},
             {"size_out", g.size()},
             {"depth_out", g.depth()},
             {"depth_bound", Round6(bound)},
             {"interval_ok", interval_ok},
             {"equal", equal},
             {"depth_ok", depth_ok},
             {"ok", interval_ok && equal && depth_ok}};
    rec["size_exponent"] =
        f.size() > 1 ? json(Round6(std::log(double(g.size())) / std::log(s))) : json(nullptr);
    return rec;
  });
  // Exponent over the larger inputs only; tiny formulas make the ratio noisy.
  double max_exp = 0;
  int max_depth = 0;
  for (const auto& t : out.trials) {
    max_depth = std::max(max_depth, t.at("depth_out").get<int>());
    if (t.at("size_in").get<int>() >= 16)
      max_exp = std::max(max_exp, t.at("size_exponent").get<double>());
  }
  const bool fixture = DepthFixtureOk(F);
  const int failures = CountFailures(out.trials);
  out.summary = {{"failures", failures},
                 {"max_depth_out", max_depth},
                 {"max_size_exponent", max_exp},
                 {"regression_fixture_ok", fixture}};
  out.ok = failures == 0 && fixture;
  return out;
}

const std::map<std::string, Runner>& Registry() {
  static const std::map<std::string, Runner> registry = {
      {"pry-full-rank", PryFullRank},       {"ry-all-partitions", RyAllPartitions},
      {"dmpy-full-rank", DmpyFullRank},     {"rof-deficit-mc", RofDeficit},
      {"convert-corpus", ConvertCorpus},    {"pit-corpus", PitCorpus},
      {"depthred-corpus", DepthredCorpus},
  };
  return registry;
}

}  // namespace

std::vector<std::string> ExperimentNames() {
  std::vector<std::string> names;
  for (const auto& [name, _] : Registry()) names.push_back(name);
  return names;
}

json RunExperiment(const ExperimentConfig& config) {
  const auto it = Registry().find(config.name);
  if (it == Registry().end()) throw Error(ErrorCode::kInvalidArgument, "unknown experiment " + config.name);
  const Field field(config.prime);
  Params params(config.params);
  Outcome outcome = it->second(params, config, field);
  return json{{"tool", "boundread"},
              {"version", Version()},
              {"experiment", config.name},
              {"params", params.used()},
              {"seed", config.seed},
              {"prime", config.prime},
              {"trials", std::move(outcome.trials)},
              {"summary", std::move(outcome.summary)},
              {"ok", outcome.ok}};
}

}  // namespace boundread::cli
