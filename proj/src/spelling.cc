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

#include "spelling.h"

#include <stdexcept>

namespace wordarea {

namespace {

// Dense n x n tables get unwieldy past this; well beyond working sizes.
constexpr int kMaxTableLength = 8192;

}  // namespace

IntervalTable ComputeIntervalTable(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n > kMaxTableLength) {
    throw std::length_error("word too long for the interval table");
  }
  IntervalTable table(n);
  for (int i = 1; i <= n; ++i) table.cell(i, i) = 1;
  for (int span = 1; span < n; ++span) {
    for (int i = 1; i + span <= n; ++i) {
      const int j = i + span;
      const Letter target = w.letters[j - 1].Inverse();
      int best = table.at(i, j - 1) + 1;  // delete x_j
      for (int r = i; r < j; ++r) {
        if (w.letters[r - 1] == target) {
          int candidate = table.at(i, r - 1) + table.at(r + 1, j - 1);
          if (candidate < best) best = candidate;
        }
      }
      table.cell(i, j) = best;
    }
  }
  return table;
}

namespace {

void TraceMatching(const Word& w, const IntervalTable& table, int i, int j,
                   Matching* out) {
  while (i <= j) {
    if (i == j) return;  // single letter: deleted
    const int value = table.at(i, j);
    const Letter target = w.letters[j - 1].Inverse();
    int match = 0;
    for (int r = i; r < j; ++r) {
      if (w.letters[r - 1] == target &&
          table.at(i, r - 1) + table.at(r + 1, j - 1) == value) {
        match = r;
        break;
      }
    }
    if (match == 0) {
      j -= 1;  // delete x_j, continue on the prefix
      continue;
    }
    out->pairs.emplace_back(match, j);
    TraceMatching(w, table, match + 1, j - 1, out);
    j = match - 1;
  }
}

}  // namespace

TrivialArea AreaFreeTrivial(const Word& w) {
  TrivialArea result;
  if (w.empty()) return result;
  IntervalTable table = ComputeIntervalTable(w);
  const int n = static_cast<int>(w.size());
  result.area = table.at(1, n);
  TraceMatching(w, table, 1, n, &result.matching);
  return result;
}

}  // namespace wordarea
