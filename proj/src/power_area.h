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

#ifndef WORDAREA_POWER_AREA_H_
#define WORDAREA_POWER_AREA_H_

#include <cstdint>
#include <span>
#include <vector>

#include "witness.h"
#include "word.h"

// Exact area over the presentation whose relators are all proper powers of
// the generators: one move deletes a whole single-generator, single-sign run,
// and adjacent inverse pairs still cancel for free.
//
// For an alternating word a^{i_1} b^{i'_1} ... a^{i_m} b^{i'_m} two interval
// tables are filled over syllable ranges [j, k] and a replacement exponent r:
//
//   last(j, k, r)  = area of a^{i_j} b^{i'_j} ... a^{i_k} b^r
//   first(r, j, k) = area of a^r b^{i'_j} ... a^{i_k} b^{i'_k}
//
// |r| never exceeds the letter length n in any split of the input, so entries
// beyond that are pruned to infinity. Quartic in n overall.

namespace wordarea {

// Area of the single-generator word g^e: zero only for the empty word.
int PowArea(long long e);

class AreaTables {
 public:
  static constexpr int32_t kInfinity = 1 << 28;

  int m() const { return m_; }
  long long n() const { return n_; }

  // a-exponent i_j and b-exponent i'_j, 1-based.
  long long ia(int j) const { return ia_[j - 1]; }
  long long ib(int j) const { return ib_[j - 1]; }

  int32_t last(int j, int k, long long r) const {
    if (r < -n_ || r > n_) return kInfinity;
    return last_[Index(j, k, r)];
  }

  int32_t first(long long r, int j, int k) const {
    if (r < -n_ || r > n_) return kInfinity;
    return first_[Index(j, k, r)];
  }

  // Area of the whole word: first(i_1, 1, m).
  int32_t Answer() const;

 private:
  friend AreaTables ComputeAreaTables(const SyllableWord&);

  explicit AreaTables(const SyllableWord& sw);

  size_t Index(int j, int k, long long r) const {
    return (static_cast<size_t>(j - 1) * m_ + (k - 1)) * (2 * n_ + 1) +
           static_cast<size_t>(r + n_);
  }

  int m_;
  long long n_;
  std::vector<long long> ia_, ib_;
  std::vector<int32_t> last_, first_;
};

// Fills both tables; rejects inputs whose tables would not fit in memory.
AreaTables ComputeAreaTables(const SyllableWord& sw);

// Reads one minimizing split tree back out of the tables as a block partition
// of the letters of the alternating word. Ties resolve toward the smallest
// split index, preferring the split at a b/a syllable boundary.
NonCrossingPartition TracebackPartition(const AreaTables& tables);

struct PowersArea {
  long long area = 0;
  CanonicalForm canonical;
  NonCrossingPartition partition;  // over canonical.word
};

PowersArea AreaPowerRelators(const Word& w);

// Joint check of the subset-sum criterion on w = a b^{i_1} a b^{i_2} ... :
// area stays within k exactly when some nonempty subsequence of the exponents
// sums to zero, and never exceeds k + 1.
struct CriterionReport {
  std::vector<long long> entries;
  Word word;
  long long area = 0;
  bool subset_exists = false;
  std::vector<int> subset_witness;
  bool area_within_count = false;  // area <= k
  bool equivalence_holds = false;  // area_within_count == subset_exists
  bool upper_bound_holds = false;  // area <= k + 1
};

CriterionReport CheckSubsetCriterion(std::span<const long long> entries);

}  // namespace wordarea

#endif  // WORDAREA_POWER_AREA_H_
