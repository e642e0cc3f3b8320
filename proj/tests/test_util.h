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

#ifndef WORDAREA_TESTS_TEST_UTIL_H_
#define WORDAREA_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <string>

namespace testutil {

// splitmix64: deterministic across platforms so failures replay exactly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t Below(uint64_t bound) { return Next() % bound; }

 private:
  uint64_t state_;
};

inline std::string RandomLetters(Rng& rng, int length) {
  static constexpr char kAlphabet[] = {'a', 'A', 'b', 'B'};
  std::string text;
  text.reserve(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) text += kAlphabet[rng.Below(4)];
  return text;
}

// Biased toward same-letter runs; stresses run deletions and syllable paths.
inline std::string RandomRuns(Rng& rng, int length) {
  std::string text;
  while (static_cast<int>(text.size()) < length) {
    const char gen = rng.Below(2) == 0 ? 'a' : 'b';
    const char letter = rng.Below(2) == 0 ? gen : (gen == 'a' ? 'A' : 'B');
    int run = 1 + static_cast<int>(rng.Below(3));
    while (run-- > 0 && static_cast<int>(text.size()) < length) text += letter;
  }
  return text;
}

// Strictly alternating nonzero syllables a^e1 b^f1 ..., at most `max_exp`
// letters per syllable; already freely and cyclically reduced.
inline std::string RandomAlternating(Rng& rng, int pairs, int max_exp) {
  std::string text;
  for (int p = 0; p < pairs; ++p) {
    for (const char gen : {'a', 'b'}) {
      const int magnitude =
          1 + static_cast<int>(rng.Below(static_cast<uint64_t>(max_exp)));
      const bool negative = rng.Below(2) == 0;
      const char letter = negative ? (gen == 'a' ? 'A' : 'B') : gen;
      text.append(static_cast<size_t>(magnitude), letter);
    }
  }
  return text;
}

}  // namespace testutil

#endif  // WORDAREA_TESTS_TEST_UTIL_H_
