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

#ifndef BOUNDREAD_CLI_EXPERIMENTS_H_
#define BOUNDREAD_CLI_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "boundread/core/field.h"

namespace boundread::cli {

struct ExperimentConfig {
  std::string name;
  // Integer parameters; absent keys take the experiment's defaults and
  // unknown keys are rejected.
  nlohmann::json params = nlohmann::json::object();
  uint64_t seed = 0;
  uint64_t prime = Field::kDefaultModulus;
  // Trial-level parallelism; never part of the report.
  int threads = 1;
};

std::vector<std::string> ExperimentNames();

// Report: {tool, version, experiment, params (resolved), seed, prime, trials,
// summary, ok}. Trial i draws from seed ^ i, so the report is a function of
// (name, params, seed, prime) alone. kInvalidArgument on an unknown name or
// a bad parameter.
nlohmann::json RunExperiment(const ExperimentConfig& config);

}  // namespace boundread::cli

#endif  // BOUNDREAD_CLI_EXPERIMENTS_H_
