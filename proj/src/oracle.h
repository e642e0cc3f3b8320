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

#ifndef WORDAREA_ORACLE_H_
#define WORDAREA_ORACLE_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "word.h"

// Reference implementations that take the move definitions at face value and
// search every residue word. Exponential, so they carry hard length bounds;
// their whole purpose is arbitrating the polynomial algorithms on small
// inputs. Memos persist per instance, so reusing one instance across a test
// run amortizes shared residues; instances are not safe to share between
// threads.

namespace wordarea {

class Oracle {
 public:
  static constexpr int kDefaultMaxLength = 14;
  static constexpr int kDefaultPartitionMaxLength = 12;

  explicit Oracle(int max_length = kDefaultMaxLength,
                  int partition_max_length = kDefaultPartitionMaxLength);

  // Minimal deletions to empty the word when single letters delete and
  // adjacent inverse pairs cancel.
  long long AreaTrivial(const Word& w);

  // Same, but one deletion takes any contiguous single-generator,
  // single-sign run.
  long long AreaPowers(const Word& w);

  // Minimum implied area over every non-crossing single-generator partition
  // of the letters: blocks with nonzero exponent sum count one each.
  long long PartitionMin(const Word& w);

 private:
  int SolveTrivial(const std::string& s);
  int SolvePowers(const std::string& s);

  int max_length_;
  int partition_max_length_;
  std::unordered_map<std::string, int> memo_trivial_;
  std::unordered_map<std::string, int> memo_powers_;
  std::vector<int16_t> part_, open_;  // PartitionMin scratch
};

}  // namespace wordarea

#endif  // WORDAREA_ORACLE_H_
