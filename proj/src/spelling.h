// Copyright 2026 The Wordarea Authors. All Rights Reserved.
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

#ifndef WORDAREA_SPELLING_H_
#define WORDAREA_SPELLING_H_

#include <vector>

#include "witness.h"
#include "word.h"

// Exact area over the presentation whose relators are the generators
// themselves: every letter can be deleted for unit cost and adjacent inverse
// pairs cancel for free. Interval dynamic program, cubic in the length.

namespace wordarea {

// table(i, j) = area of the factor x_i..x_j, 1-based; empty intervals are 0.
class IntervalTable {
 public:
  explicit IntervalTable(int n) : n_(n), cells_(static_cast<size_t>(n) * n, 0) {}

  int n() const { return n_; }

  int at(int i, int j) const {
    if (i > j) return 0;
    return cells_[Index(i, j)];
  }

  int& cell(int i, int j) { return cells_[Index(i, j)]; }

 private:
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<int> cells_;
};

IntervalTable ComputeIntervalTable(const Word& w);

struct TrivialArea {
  long long area = 0;
  Matching matching;  // over w itself; implied area equals `area`
};

TrivialArea AreaFreeTrivial(const Word& w);

}  // namespace wordarea

#endif  // WORDAREA_SPELLING_H_
