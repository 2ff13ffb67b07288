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

#include "boundread/core/error.h"

namespace boundread {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOverlappingSupports: return "OverlappingSupports";
    case ErrorCode::kNonMultilinear: return "NonMultilinear";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kNotRoabp: return "NotRoabp";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kMixedClassification: return "MixedClassification";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace boundread
