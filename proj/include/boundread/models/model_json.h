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

#ifndef BOUNDREAD_MODELS_MODEL_JSON_H_
#define BOUNDREAD_MODELS_MODEL_JSON_H_

#include <cstdint>
#include <variant>

#include "boundread/core/field.h"
#include "boundread/models/abp.h"
#include "boundread/models/formula.h"
#include "json.hpp"

namespace boundread {

// Formulas: {"kind": "formula", "n", "p", "root"} where a gate is
// ["+", g...], ["*", g...], {"x": i} or {"c": v}.
// ABPs: {"kind": "abp", "n", "p", "layers": [[ids]],
//        "edges": [{"from", "to", "var"?, "coeff"}]}.
// Output is canonical: edges sorted by (from, to, var), layers as stored.
nlohmann::json FormulaToJson(const Formula& formula);
nlohmann::json AbpToJson(const Abp& abp);

// kParse on malformed input; `default_modulus` applies when "p" is absent.
// Coefficients may be signed.
Formula FormulaFromJson(const nlohmann::json& j, uint64_t default_modulus = Field::kDefaultModulus);
Abp AbpFromJson(const nlohmann::json& j, uint64_t default_modulus = Field::kDefaultModulus);

using Model = std::variant<Formula, Abp>;
// Dispatches on "kind"; without it, the presence of "root" or "layers".
Model ModelFromJson(const nlohmann::json& j, uint64_t default_modulus = Field::kDefaultModulus);
nlohmann::json ModelToJson(const Model& model);

}  // namespace boundread

#endif  // BOUNDREAD_MODELS_MODEL_JSON_H_
