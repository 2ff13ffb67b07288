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

#include "boundread/cli/commands.h"

#include <bit>
#include <variant>

#include "boundread/core/error.h"
#include "boundread/core/poly_json.h"
#include "boundread/hardpoly/block_structure.h"
#include "boundread/hardpoly/dmpy.h"
#include "boundread/hardpoly/random_models.h"
#include "boundread/hardpoly/ry.h"
#include "boundread/models/model_json.h"
#include "boundread/models/validators.h"
#include "boundread/partitions/partition.h"
#include "boundread/partitions/sampling.h"
#include "boundread/pit/pit.h"
#include "boundread/rank/pd_matrix.h"
#include "boundread/transforms/depth_reduction.h"
#include "boundread/transforms/roabp_convert.h"

namespace boundread::cli {

using nlohmann::json;

json GenPoly(const std::string& family, int n, int r, uint64_t seed, const Field& field) {
  if (family == "ry") {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
    return PolyToJson(GenerateRy(n, field, vars, WAssignment::Random(vars, field, seed)));
  }
  if (family == "pry") {
    const BlockStructure bs(n, r);
    return PolyToJson(GeneratePry(bs, field, WAssignment::RandomForBlocks(bs, field, seed)));
  }
  if (family == "dmpy") {
    return PolyToJson(GenerateDmpy(n, field, LambdaAssignment::Random(n, field, seed)));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown polynomial family " + family);
}

json GenModel(const std::string& family, int n, int width, int size, uint64_t seed,
              const Field& field) {
  if (family == "rof") return FormulaToJson(RandomRof(n, seed, field));
  if (family == "roabp") return AbpToJson(RandomRoabp(n, width, seed, field));
  if (family == "interval-formula") return FormulaToJson(RandomIntervalFormula(n, size, seed, field));
  if (family == "strict-interval-abp") return AbpToJson(RandomStrictIntervalAbp(n, size, seed, field));
  throw Error(ErrorCode::kInvalidArgument, "unknown model family " + family);
}

json RankCommand(const json& poly, const json& partition) {
  const MultilinearPoly f = PolyFromJson(poly);
  const Partition phi = PartitionFromJson(partition, f.num_vars());
  const int rank = RankOf(f, phi);
  json out{{"rank", rank}};
  if (f.num_vars() % 2 == 0 && rank > 0 && std::has_single_bit(static_cast<unsigned>(rank)))
    out["logdeficit"] = f.num_vars() / 2 - std::countr_zero(static_cast<unsigned>(rank));
  return out;
}

json SamplePartitionCommand(const std::string& kind, int n, int r, uint64_t seed) {
  if (kind == "equi") return PartitionToJson(SampleEquipartition(n, seed));
  if (kind == "db") return PartitionToJson(SampleDb(BlockStructure(n, r), seed));
  if (kind == "arc") {
    const ArcPartition arc = SampleArcPartition(n, seed);
    json out = PartitionToJson(arc.partition);
    out["pairs"] = PairingToJson(arc.pairing).at("pairs");
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown partition kind " + kind);
}

ConvertOutput ConvertCommand(const json& abp_json, uint64_t default_modulus) {
  const Abp abp = AbpFromJson(abp_json, default_modulus);
  const ConversionResult conv = ConvertStrictInterval(abp);
  json stats{{"size_in", abp.size()},
             {"size_out", conv.roabp.size()},
             {"size_bound", 2 * abp.num_vars() * abp.size()},
             {"width_out", conv.roabp.width()},
             {"ascending", conv.ascending_nodes},
             {"descending", conv.descending_nodes},
             {"neutral", conv.neutral_nodes},
             {"p1_size", conv.p1_size},
             {"p2_size", conv.p2_size}};
  return {AbpToJson(conv.roabp), std::move(stats)};
}

json DepthReduceCommand(const json& formula_json, bool verify, uint64_t default_modulus) {
  const Formula f = FormulaFromJson(formula_json, default_modulus);
  const Formula g = DepthReduceInterval(f);
  if (verify && ExpandFormula(g) != ExpandFormula(f))
    throw Error(ErrorCode::kInvalidModel, "depth reduction changed the polynomial");
  return FormulaToJson(g);
}

json PitCommand(const json& model_json, uint64_t default_modulus) {
  const Model model = ModelFromJson(model_json, default_modulus);
  const Abp* abp = std::get_if<Abp>(&model);
  if (abp == nullptr) throw Error(ErrorCode::kInvalidModel, "pit expects an ABP");
  const PitResult r = CheckObliviousRoabp(Prune(*abp)).report.ok ? RoabpPit(*abp)
                                                                 : StrictIntervalPit(*abp);
  json out{{"verdict", r.zero ? "zero" : "nonzero"}};
  if (!r.zero) {
    out["witness_mask"] = r.witness_mask;
    out["witness_point"] = r.witness_point;
  }
  return out;
}

namespace {

json Check(const std::string& name, const StructReport& r) {
  json out{{"name", name}, {"ok", r.ok}};
  if (!r.ok) out["witness"] = r.witness;
  return out;
}

}  // namespace

json ValidateCommand(const json& model_json, uint64_t default_modulus) {
  const Model model = ModelFromJson(model_json, default_modulus);
  json checks = json::array();
  json out;
  if (const Formula* f = std::get_if<Formula>(&model)) {
    out = {{"kind", "formula"}, {"n", f->num_vars()}, {"size", f->size()}, {"depth", f->depth()},
           {"read_k", ReadK(*f)}};
    checks.push_back(Check("syntactic_multilinear", CheckSyntacticMultilinear(*f)));
    checks.push_back(Check("read_once", CheckRof(*f)));
    checks.push_back(Check("interval_formula", CheckIntervalFormula(*f)));
  } else {
    const Abp& a = std::get<Abp>(model);
    out = {{"kind", "abp"}, {"n", a.num_vars()}, {"size", a.size()}, {"width", a.width()}};
    checks.push_back(Check("syntactic_multilinear", CheckSyntacticMultilinear(a)));
    const RoabpCheck roabp = CheckObliviousRoabp(a);
    json rc = Check("oblivious_roabp", roabp.report);
    if (roabp.report.ok) rc["order"] = roabp.order;
    checks.push_back(std::move(rc));
    checks.push_back(Check("strict_interval", CheckStrictInterval(a).report));
  }
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace boundread::cli
