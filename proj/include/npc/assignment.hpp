// Copyright 2026 The npc-coref Authors
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

#pragma once

#include <vector>

namespace npc {

struct Assignment {
  double total = 0.0;
  // row_to_col[r] is the column assigned to row r, or -1 when the row is
  // left unassigned (rectangular instances).
  std::vector<int> row_to_col;
};

// Maximum-total-weight one-to-one assignment between rows and columns of a
// rectangular nonnegative weight matrix (Kuhn-Munkres on the negated,
// zero-padded square matrix). O(n^3).
Assignment max_assignment(const std::vector<std::vector<double>>& weight);

}  // namespace npc
