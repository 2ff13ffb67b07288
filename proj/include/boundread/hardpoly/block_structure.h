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

#ifndef BOUNDREAD_HARDPOLY_BLOCK_STRUCTURE_H_
#define BOUNDREAD_HARDPOLY_BLOCK_STRUCTURE_H_

#include <vector>

namespace boundread {

// Contiguous blocks B_i = {i*r, ..., (i+1)*r - 1} of [n]. Requires r even,
// r | n and n/r even (kInvalidArgument otherwise).
class BlockStructure {
 public:
  BlockStructure(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int num_blocks() const { return n_ / r_; }
  std::vector<int> Block(int i) const;

 private:
  int n_;
  int r_;
};

}  // namespace boundread

#endif  // BOUNDREAD_HARDPOLY_BLOCK_STRUCTURE_H_
