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

// boundread command-line front end. Exit codes: 0 success (pit: zero),
// 1 pit nonzero or a failed experiment, 2 malformed input, 3 other errors.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "boundread/cli/commands.h"
#include "boundread/cli/experiments.h"
#include "boundread/cli/report.h"
#include "boundread/core/error.h"
#include "boundread/core/field.h"

namespace {

using nlohmann::json;
namespace bc = boundread::cli;

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw boundread::Error(boundread::ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

void EmitJson(const std::string& path, const json& j) { Emit(path, j.dump(2) + "\n"); }

json ParseParams(const std::vector<std::string>& items) {
  json params = json::object();
  for (const std::string& item : items) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw boundread::Error(boundread::ErrorCode::kInvalidArgument, "expected key=value, got " + item);
    const std::string value = item.substr(eq + 1);
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size())
      throw boundread::Error(boundread::ErrorCode::kInvalidArgument, "non-integer value in " + item);
    params[item.substr(0, eq)] = v;
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundread: multilinear models, ranks, transformations and PIT"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", bc::Version());

  uint64_t prime = boundread::Field::kDefaultModulus;
  uint64_t seed = 0;
  int threads = 1;
  app.add_option("--prime", prime, "Field modulus")->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for experiments")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();

  std::string family, kind, in, out, partition, csv, name;
  int n = 8, r = 2, width = 3, size = 20;
  bool emit_stats = false, verify = false;
  std::vector<std::string> params;

  auto* gen_poly = app.add_subcommand("gen-poly", "Generate an explicit polynomial");
  gen_poly->add_option("--family", family, "ry | pry | dmpy")->required();
  gen_poly->add_option("--n", n, "Number of variables")->capture_default_str();
  gen_poly->add_option("--r", r, "Block size (pry)")->capture_default_str();
  gen_poly->add_option("--out", out, "Output file (default stdout)");

  auto* gen_model = app.add_subcommand("gen-model", "Generate a random model");
  gen_model->add_option("--family", family, "rof | roabp | interval-formula | strict-interval-abp")
      ->required();
  gen_model->add_option("--n", n, "Number of variables")->capture_default_str();
  gen_model->add_option("--width", width, "Width (roabp)")->capture_default_str();
  gen_model->add_option("--size", size, "Target size (interval models)")->capture_default_str();
  gen_model->add_option("--out", out, "Output file (default stdout)");

  auto* rank = app.add_subcommand("rank", "Rank of the partial derivative matrix");
  rank->add_option("--poly", in, "Polynomial JSON")->required();
  rank->add_option("--partition", partition, "Partition JSON")->required();

  auto* sample = app.add_subcommand("sample-partition", "Sample a partition");
  sample->add_option("--kind", kind, "equi | db | arc")->required();
  sample->add_option("--n", n, "Number of variables")->capture_default_str();
  sample->add_option("--r", r, "Block size (db)")->capture_default_str();
  sample->add_option("--out", out, "Output file (default stdout)");

  auto* convert = app.add_subcommand("convert", "Strict-interval ABP to ROABP");
  convert->add_option("--in", in, "ABP JSON")->required();
  convert->add_option("--out", out, "Output file (default stdout)");
  convert->add_flag("--emit-stats", emit_stats, "Print conversion statistics to stderr");

  auto* depth = app.add_subcommand("depth-reduce", "Balance an interval formula");
  depth->add_option("--in", in, "Formula JSON")->required();
  depth->add_option("--out", out, "Output file (default stdout)");
  depth->add_flag("--verify", verify, "Check the expansion against the input");

  auto* pit = app.add_subcommand("pit", "Identity test for ROABPs and strict-interval ABPs");
  pit->add_option("--in", in, "Model JSON")->required();

  auto* validate = app.add_subcommand("validate", "Run all structural checks on a model");
  validate->add_option("file", in, "Model JSON")->required();

  auto* experiment = app.add_subcommand("experiment", "Run a named experiment");
  experiment->add_option("name", name, "Experiment name")
      ->required()
      ->check(CLI::IsMember(bc::ExperimentNames()));
  experiment->add_option("--param,-P", params, "Parameter as key=value (repeatable)");
  experiment->add_option("--out", out, "Report file (default stdout)");
  experiment->add_option("--csv", csv, "Also write the trials as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    const boundread::Field field(prime);
    if (*gen_poly) {
      EmitJson(out, bc::GenPoly(family, n, r, seed, field));
    } else if (*gen_model) {
      EmitJson(out, bc::GenModel(family, n, width, size, seed, field));
    } else if (*rank) {
      std::cout << bc::RankCommand(bc::ReadJsonFile(in), bc::ReadJsonFile(partition)).dump() << "\n";
    } else if (*sample) {
      EmitJson(out, bc::SamplePartitionCommand(kind, n, r, seed));
    } else if (*convert) {
      const bc::ConvertOutput result = bc::ConvertCommand(bc::ReadJsonFile(in), prime);
      EmitJson(out, result.roabp);
      if (emit_stats) std::cerr << result.stats.dump() << "\n";
    } else if (*depth) {
      EmitJson(out, bc::DepthReduceCommand(bc::ReadJsonFile(in), verify, prime));
    } else if (*pit) {
      const json verdict = bc::PitCommand(bc::ReadJsonFile(in), prime);
      std::cout << verdict.dump() << "\n";
      return verdict.at("verdict") == "zero" ? 0 : 1;
    } else if (*validate) {
      EmitJson("", bc::ValidateCommand(bc::ReadJsonFile(in), prime));
    } else if (*experiment) {
      const json report = bc::RunExperiment({name, ParseParams(params), seed, prime, threads});
      EmitJson(out, report);
      if (!csv.empty()) Emit(csv, bc::ReportToCsv(report));
      if (!report.at("ok").get<bool>()) {
        std::cerr << "experiment " << name << " reported a violation\n";
        return 1;
      }
    }
  } catch (const boundread::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == boundread::ErrorCode::kParse ? 2 : 3;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
