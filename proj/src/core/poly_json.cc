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

#include "boundread/core/poly_json.h"

#include <vector>

#include "boundread/core/error.h"

namespace boundread {

nlohmann::json PolyToJson(const MultilinearPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"mask", t.mask}, {"coeff", t.coeff}});
  }
  return {{"n", f.num_vars()}, {"p", f.field().modulus()}, {"terms", terms}};
}

MultilinearPoly PolyFromJson(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const Field field(j.contains("p") ? j.at("p").get<uint64_t>() : Field::kDefaultModulus);
    std::vector<MultilinearPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("coeff");
      uint64_t coeff = c.is_number_unsigned() ? field.Reduce(c.get<uint64_t>())
                                              : field.FromSigned(c.get<int64_t>());
      terms.push_back({t.at("mask").get<VarMask>(), coeff});
    }
    return MultilinearPoly::FromTerms(n, field, terms);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace boundread
