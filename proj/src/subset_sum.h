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

#ifndef WORDAREA_SUBSET_SUM_H_
#define WORDAREA_SUBSET_SUM_H_

#include <span>
#include <vector>

// Does some nonempty subsequence of nonzero integers i_1..i_k sum to zero?
// Pseudo-polynomial table over achievable sums, O(k * sum|i_q|).

namespace wordarea {

// reachable(p, q) = 1 iff some nonempty subsequence taken from i_q..i_k sums
// to p. Sums are clamped to |p| <= n where n = sum of |i_q|.
class SubsetTable {
 public:
  SubsetTable(int k, long long n)
      : k_(k), n_(n), cells_(static_cast<size_t>(k) * (2 * n + 1), 0) {}

  int k() const { return k_; }
  long long n() const { return n_; }

  bool reachable(long long p, int q) const {
    if (p < -n_ || p > n_ || q < 1 || q > k_) return false;
    return cells_[Index(p, q)] != 0;
  }

  void mark(long long p, int q) { cells_[Index(p, q)] = 1; }

 private:
  size_t Index(long long p, int q) const {
    return static_cast<size_t>(q - 1) * (2 * n_ + 1) +
           static_cast<size_t>(p + n_);
  }

  int k_;
  long long n_;
  std::vector<unsigned char> cells_;
};

// Entries must be nonzero (throws std::invalid_argument otherwise); an empty
// span is a valid instance with no subsequence to find.
SubsetTable ComputeSubsetTable(std::span<const long long> entries);

struct ZeroSubset {
  bool exists = false;
  std::vector<int> witness;  // ascending 1-based indices; empty iff !exists
};

ZeroSubset FindZeroSubset(std::span<const long long> entries);

// True iff `witness` is a valid certificate: strictly ascending in-range
// indices, nonempty, summing to zero. Out-of-range or unordered indices throw.
bool ValidateSubset(std::span<const long long> entries,
                    std::span<const int> witness);

}  // namespace wordarea

#endif  // WORDAREA_SUBSET_SUM_H_
