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

#include "boundread/hardpoly/block_structure.h"

#include <string>

#include "boundread/core/error.h"

namespace boundread {

BlockStructure::BlockStructure(int n, int r) : n_(n), r_(r) {
  if (n <= 0 || r <= 0 || r % 2 != 0 || n % r != 0 || (n / r) % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "block structure needs r even, r | n and n/r even (n=" + std::to_string(n) +
                    ", r=" + std::to_string(r) + ")");
  }
}

std::vector<int> BlockStructure::Block(int i) const {
  std::vector<int> out(r_);
  for (int k = 0; k < r_; ++k) out[k] = i * r_ + k;
  return out;
}

}  // namespace boundread
