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

#ifndef BOUNDREAD_CORE_POLY_JSON_H_
#define BOUNDREAD_CORE_POLY_JSON_H_

#include "boundread/core/multilinear.h"
#include "json.hpp"

namespace boundread {

// {"n": int, "p": int, "terms": [{"mask": int, "coeff": int}, ...]} with masks
// strictly increasing.
nlohmann::json PolyToJson(const MultilinearPoly& f);
// Accepts terms in any order (duplicates summed, coefficients reduced mod p);
// throws kParse on a malformed document.
MultilinearPoly PolyFromJson(const nlohmann::json& j);

}  // namespace boundread

#endif  // BOUNDREAD_CORE_POLY_JSON_H_
