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

#ifndef BOUNDREAD_CLI_COMMANDS_H_
#define BOUNDREAD_CLI_COMMANDS_H_

#include <cstdint>
#include <string>

#include "json.hpp"

#include "boundread/core/field.h"

namespace boundread::cli {

// Families: ry (variables 0..n-1), pry (blocks of size r), dmpy.
nlohmann::json GenPoly(const std::string& family, int n, int r, uint64_t seed, const Field& field);

// Families: rof, roabp (uses width), interval-formula and
// strict-interval-abp (use size).
nlohmann::json GenModel(const std::string& family, int n, int width, int size, uint64_t seed,
                        const Field& field);

// {"rank": k} plus "logdeficit" = n/2 - log2(k) when that is an integer.
nlohmann::json RankCommand(const nlohmann::json& poly, const nlohmann::json& partition);

// Kinds: equi, db (uses r), arc (also reports the pairing).
nlohmann::json SamplePartitionCommand(const std::string& kind, int n, int r, uint64_t seed);

struct ConvertOutput {
  nlohmann::json roabp;
  nlohmann::json stats;
};
ConvertOutput ConvertCommand(const nlohmann::json& abp, uint64_t default_modulus);

// With `verify`, kInvalidModel if the expansions differ.
nlohmann::json DepthReduceCommand(const nlohmann::json& formula, bool verify,
                                  uint64_t default_modulus);

// {"verdict", "witness_mask"?, "witness_point"?}. ROABPs are tested
// directly, other strict-interval programs after conversion.
nlohmann::json PitCommand(const nlohmann::json& model, uint64_t default_modulus);

// Runs every checker applicable to the model kind.
nlohmann::json ValidateCommand(const nlohmann::json& model, uint64_t default_modulus);

}  // namespace boundread::cli

#endif  // BOUNDREAD_CLI_COMMANDS_H_
