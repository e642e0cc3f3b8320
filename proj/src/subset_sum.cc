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

#include "subset_sum.h"

#include <cstdlib>
#include <stdexcept>

namespace wordarea {

namespace {

constexpr long long kMaxCells = 1LL << 28;

long long CheckedMagnitude(std::span<const long long> entries) {
  long long n = 0;
  for (long long v : entries) {
    if (v == 0) throw std::invalid_argument("subset entries must be nonzero");
    n += std::llabs(v);
    if (n > kMaxCells) throw std::length_error("subset instance too large");
  }
  if (static_cast<long long>(entries.size()) * (2 * n + 1) > kMaxCells) {
    throw std::length_error("subset instance too large");
  }
  return n;
}

}  // namespace

SubsetTable ComputeSubsetTable(std::span<const long long> entries) {
  const int k = static_cast<int>(entries.size());
  const long long n = CheckedMagnitude(entries);
  SubsetTable table(k, n);
  // Column q only depends on column q+1; the missing column k+1 is all zero,
  // so the last column holds exactly the singleton subsequence {i_k}.
  for (int q = k; q >= 1; --q) {
    const long long iq = entries[q - 1];
    for (long long p = -n; p <= n; ++p) {
      if (table.reachable(p, q + 1) || table.reachable(p - iq, q + 1) ||
          iq == p) {
        table.mark(p, q);
      }
    }
  }
  return table;
}

ZeroSubset FindZeroSubset(std::span<const long long> entries) {
  ZeroSubset result;
  if (entries.empty()) return result;
  SubsetTable table = ComputeSubsetTable(entries);
  if (!table.reachable(0, 1)) return result;
  result.exists = true;

  // Walk the table generating one certificate; skipping i_q beats taking it,
  // which keeps the walk deterministic.
  long long p = 0;
  int q = 1;
  while (true) {
    const long long iq = entries[q - 1];
    if (table.reachable(p, q + 1)) {
      ++q;
      continue;
    }
    result.witness.push_back(q);
    if (iq == p) break;
    p -= iq;
    ++q;
  }
  return result;
}

bool ValidateSubset(std::span<const long long> entries,
                    std::span<const int> witness) {
  const int k = static_cast<int>(entries.size());
  long long sum = 0;
  int previous = 0;
  for (int index : witness) {
    if (index < 1 || index > k) {
      throw std::invalid_argument("subset witness index out of range");
    }
    if (index <= previous) {
      throw std::invalid_argument("subset witness indices must ascend");
    }
    previous = index;
    sum += entries[index - 1];
  }
  return !witness.empty() && sum == 0;
}

}  // namespace wordarea
