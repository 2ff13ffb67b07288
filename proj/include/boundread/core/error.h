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

#ifndef BOUNDREAD_CORE_ERROR_H_
#define BOUNDREAD_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace boundread {

enum class ErrorCode {
  kInvalidArgument,
  kModulusMismatch,
  kDivisionByZero,
  kDimensionMismatch,
  kOverlappingSupports,
  kNonMultilinear,
  kCapExceeded,
  kInvalidModel,
  kNotRoabp,
  kOrderMismatch,
  kMixedClassification,
  kParse,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` lets callers and
// tests distinguish the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace boundread

#endif  // BOUNDREAD_CORE_ERROR_H_
