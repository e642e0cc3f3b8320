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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "oracle.h"
#include "spelling.h"
#include "test_util.h"
#include "witness.h"
#include "word.h"

namespace {

using wordarea::AreaFreeTrivial;
using wordarea::ComputeIntervalTable;
using wordarea::ExecuteNullSequence;
using wordarea::MatchingToNullSequence;
using wordarea::Oracle;
using wordarea::ParseWord;
using wordarea::Presentation;
using wordarea::ValidateMatching;
using wordarea::Word;

long long Area(const std::string& text) {
  return AreaFreeTrivial(ParseWord(text)).area;
}

// Validates the matching, compiles it to moves, and replays them; the word
// must empty at exactly the claimed cost.
void CheckWitnessRoundTrip(const Word& w) {
  const auto result = AreaFreeTrivial(w);
  const auto check = ValidateMatching(w, result.matching);
  REQUIRE(check.ok);
  CHECK(check.implied_area == result.area);
  const auto moves = MatchingToNullSequence(w, result.matching);
  CHECK(moves.cost() == result.area);
  const auto outcome =
      ExecuteNullSequence(w, moves, Presentation::kTrivial);
  CHECK(outcome.emptied);
  CHECK(outcome.cost == result.area);
}

TEST_CASE("known areas") {
  CHECK(Area("") == 0);
  CHECK(Area("a") == 1);
  CHECK(Area("aA") == 0);
  CHECK(Area("ab") == 2);
  CHECK(Area("aB") == 2);
  CHECK(Area("abab") == 4);
  CHECK(Area("abAB") == 2);
  CHECK(Area("aabAAB") == 2);
  CHECK(Area("aaa") == 3);
  CHECK(Area("aaAA") == 0);
  CHECK(Area("abBA") == 0);
  // One deletion unlocks a cascade of cancellations.
  CHECK(Area("abaBA") == 1);
}

TEST_CASE("interval table invariants") {
  const Word w = ParseWord("aabAABab");
  const int n = static_cast<int>(w.size());
  const auto table = ComputeIntervalTable(w);
  REQUIRE(table.n() == n);
  for (int i = 1; i <= n; ++i) {
    CHECK(table.at(i, i) == 1);
    CHECK(table.at(i, i - 1) == 0);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const int length = j - i + 1;
      CHECK(table.at(i, j) >= 0);
      CHECK(table.at(i, j) <= length);
      // Deletions change the length by one, cancellations by two.
      CHECK((table.at(i, j) - length) % 2 == 0);
      // Splitting an interval can never beat the table value.
      for (int r = i; r < j; ++r) {
        CHECK(table.at(i, j) <= table.at(i, r) + table.at(r + 1, j));
      }
    }
  }
}

TEST_CASE("witness round-trips on fixed words") {
  for (const char* text :
       {"", "a", "aA", "ab", "abab", "abAB", "aabAAB", "abaBA", "aaabBAbBAbBA",
        "BaAbbAbABaa"}) {
    CAPTURE(text);
    CheckWitnessRoundTrip(ParseWord(text));
  }
}

TEST_CASE("matches the reference solver on every short word") {
  Oracle oracle;
  static constexpr char kAlphabet[] = {'a', 'A', 'b', 'B'};
  for (int length = 1; length <= 5; ++length) {
    uint64_t total = 1;
    for (int i = 0; i < length; ++i) total *= 4;
    std::string text(static_cast<size_t>(length), 'a');
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t rest = code;
      for (int i = 0; i < length; ++i) {
        text[static_cast<size_t>(i)] = kAlphabet[rest & 3];
        rest >>= 2;
      }
      const Word w = ParseWord(text);
      CAPTURE(text);
      CHECK(AreaFreeTrivial(w).area == oracle.AreaTrivial(w));
    }
  }
}

TEST_CASE("matches the reference solver on random words") {
  Oracle oracle;
  testutil::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text =
        testutil::RandomLetters(rng, 1 + (int)rng.Below(12));
    const Word w = ParseWord(text);
    CAPTURE(text);
    CHECK(AreaFreeTrivial(w).area == oracle.AreaTrivial(w));
    CheckWitnessRoundTrip(w);
  }
}

TEST_CASE("area is invariant under inversion and generator swap") {
  testutil::Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = ParseWord(testutil::RandomLetters(rng, (int)rng.Below(20)));
    const auto area = AreaFreeTrivial(w).area;
    CHECK(AreaFreeTrivial(wordarea::Invert(w)).area == area);
    CHECK(AreaFreeTrivial(wordarea::SwapGenerators(w)).area == area);
  }
}

TEST_CASE("area of a concatenation never exceeds the parts") {
  testutil::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = ParseWord(testutil::RandomLetters(rng, (int)rng.Below(15)));
    const Word v = ParseWord(testutil::RandomLetters(rng, (int)rng.Below(15)));
    CHECK(AreaFreeTrivial(wordarea::Concat(u, v)).area <=
          AreaFreeTrivial(u).area + AreaFreeTrivial(v).area);
  }
}

TEST_CASE("words beyond the table bound are rejected") {
  CHECK_THROWS_AS(AreaFreeTrivial(ParseWord("a^8193")), std::length_error);
  CHECK(AreaFreeTrivial(ParseWord("a^64")).area == 64);
}

}  // namespace
