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
#include <vector>

#include "doctest.h"
#include "oracle.h"
#include "power_area.h"
#include "test_util.h"
#include "witness.h"
#include "word.h"

namespace {

using wordarea::AreaPowerRelators;
using wordarea::AreaTables;
using wordarea::CanonicalForm;
using wordarea::CheckSubsetCriterion;
using wordarea::ComputeAreaTables;
using wordarea::ExecuteNullSequence;
using wordarea::Generator;
using wordarea::MakeSyllableWord;
using wordarea::Oracle;
using wordarea::ParseWord;
using wordarea::PartitionToNullSequence;
using wordarea::PowArea;
using wordarea::Presentation;
using wordarea::Syllable;
using wordarea::TracebackPartition;
using wordarea::ValidatePartition;
using wordarea::Word;
using wordarea::WordFromSyllables;

long long Area(const std::string& text) {
  return AreaPowerRelators(ParseWord(text)).area;
}

// Full pipeline check: the partition must validate over the canonical word,
// imply the reported area, and replay to an empty word at that cost.
void CheckWitnessRoundTrip(const Word& w) {
  const auto result = AreaPowerRelators(w);
  const auto check =
      ValidatePartition(result.canonical.word, result.partition);
  REQUIRE(check.ok);
  CHECK(check.implied_area == result.area);
  const auto moves =
      PartitionToNullSequence(result.canonical.word, result.partition);
  CHECK(moves.cost() == result.area);
  const auto outcome = ExecuteNullSequence(result.canonical.word, moves,
                                           Presentation::kPowers);
  CHECK(outcome.emptied);
  CHECK(outcome.cost == result.area);
}

TEST_CASE("single runs cost one deletion") {
  CHECK(PowArea(0) == 0);
  CHECK(PowArea(1) == 1);
  CHECK(PowArea(-7) == 1);
  CHECK(Area("a^5") == 1);
  CHECK(Area("b^-9") == 1);
}

TEST_CASE("known areas") {
  CHECK(Area("") == 0);
  CHECK(Area("aA") == 0);
  CHECK(Area("abAB") == 2);
  CHECK(Area("aabAAB") == 2);
  CHECK(Area("ab^2ab^-2") == 2);
  CHECK(Area("baaB") == 1);
  CHECK(Area("ab") == 2);
  // Whole-run deletions make long runs no more expensive than short ones.
  CHECK(Area("a^9b^7a^-9b^-7") == 2);
  // Deleting both a-runs leaves b^2 b^-2, which cancels away.
  CHECK(Area("a^4 b^2 a^4 b^-2") == 2);
  // With uniform signs nothing cancels, but the two b-runs still merge into
  // one deletion once the middle a-run is gone.
  CHECK(Area("a^4 b^2 a^4 b^2") == 3);
}

TEST_CASE("table base cases and bounds") {
  // Word a b a b^-1: two syllable pairs, four letters.
  const auto sw = MakeSyllableWord({{Generator::kA, 1},
                                    {Generator::kB, 1},
                                    {Generator::kA, 1},
                                    {Generator::kB, -1}});
  const auto tables = ComputeAreaTables(sw);
  REQUIRE(tables.m() == 2);
  REQUIRE(tables.n() == 4);
  CHECK(tables.ia(1) == 1);
  CHECK(tables.ib(2) == -1);
  // One pair with the trailing b-exponent replaced by r is a^i b^r.
  CHECK(tables.last(1, 1, 0) == 1);
  CHECK(tables.last(1, 1, 3) == 2);
  CHECK(tables.last(2, 2, -4) == 2);
  CHECK(tables.first(0, 2, 2) == 1);
  // The assembled answer: the word itself has area 2.
  CHECK(tables.first(1, 1, 2) == 2);
  CHECK(tables.Answer() == 2);
  // Remainders beyond the letter count are pruned.
  CHECK(tables.last(1, 1, 5) == AreaTables::kInfinity);
  CHECK(tables.first(-5, 1, 2) == AreaTables::kInfinity);
}

TEST_CASE("stored table entries never beat the true area") {
  // Soundness: every finite entry is the cost of some legal strategy for its
  // state word, so it can only overshoot the reference value, never undercut.
  Oracle oracle(16, 12);  // state words reach n + |r| letters
  testutil::Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int pairs = 1 + static_cast<int>(rng.Below(2));
    std::vector<Syllable> syllables;
    for (int p = 0; p < pairs; ++p) {
      for (const Generator gen : {Generator::kA, Generator::kB}) {
        long long e = 1 + static_cast<long long>(rng.Below(2));
        if (rng.Below(2) == 0) e = -e;
        syllables.push_back({gen, e});
      }
    }
    const auto sw = MakeSyllableWord(syllables);
    const auto tables = ComputeAreaTables(sw);
    const int m = tables.m();
    const long long n = tables.n();
    for (int j = 1; j <= m; ++j) {
      for (int k = j; k <= m; ++k) {
        for (long long r = -n; r <= n; ++r) {
          // Assemble the state word a^{i_j} b^{i'_j} .. a^{i_k} b^r.
          std::vector<Syllable> state;
          for (int l = j; l <= k; ++l) {
            state.push_back({Generator::kA, tables.ia(l)});
            if (l < k) state.push_back({Generator::kB, tables.ib(l)});
          }
          if (r != 0) state.push_back({Generator::kB, r});
          const Word state_word = WordFromSyllables(state);
          CAPTURE(j);
          CAPTURE(k);
          CAPTURE(r);
          CHECK(tables.last(j, k, r) >= oracle.AreaPowers(state_word));

          // Same for the head-replacement table.
          std::vector<Syllable> head;
          if (r != 0) head.push_back({Generator::kA, r});
          for (int l = j; l <= k; ++l) {
            if (l > j) head.push_back({Generator::kA, tables.ia(l)});
            head.push_back({Generator::kB, tables.ib(l)});
          }
          const Word head_word = WordFromSyllables(head);
          CHECK(tables.first(r, j, k) >= oracle.AreaPowers(head_word));
        }
      }
    }
  }
}

TEST_CASE("canonicalization feeds the tables") {
  const auto empty = AreaPowerRelators(ParseWord("abBA"));
  CHECK(empty.area == 0);
  CHECK(empty.canonical.kind == CanonicalForm::Kind::kEmpty);
  CHECK(empty.partition.blocks.empty());

  const auto power = AreaPowerRelators(ParseWord("baaB"));
  CHECK(power.area == 1);
  CHECK(power.canonical.kind == CanonicalForm::Kind::kPower);
  REQUIRE(power.partition.blocks.size() == 1);
  CHECK(power.partition.blocks[0].gen == Generator::kA);
  CHECK(power.partition.blocks[0].positions == std::vector<int>{1, 2});
}

TEST_CASE("traceback partitions are optimal witnesses") {
  const auto result = AreaPowerRelators(ParseWord("aabAAB"));
  CHECK(result.area == 2);
  const auto check =
      ValidatePartition(result.canonical.word, result.partition);
  REQUIRE(check.ok);
  CHECK(check.implied_area == 2);
  // Exactly one block is zero-sum (the b pair); the rest cost a move each.
  long long zero_blocks = 0;
  for (const auto& block : result.partition.blocks) {
    long long sum = 0;
    for (const int pos : block.positions) {
      const auto letter =
          result.canonical.word.letters[static_cast<size_t>(pos - 1)];
      sum += letter.sign;
    }
    if (sum == 0) ++zero_blocks;
  }
  CHECK(zero_blocks ==
        static_cast<long long>(result.partition.blocks.size()) - 2);

  for (const char* text :
       {"", "aA", "a^5", "abAB", "ab^2ab^-2", "aabAAB", "a^2b^3a^-2b^-3",
        "ab^3a^4b^-1a^2b^2a^3b", "baBAbaBA"}) {
    CAPTURE(text);
    CheckWitnessRoundTrip(ParseWord(text));
  }
}

TEST_CASE("matches the reference solver on alternating words") {
  Oracle oracle;
  static constexpr long long kExponents[] = {-2, -1, 1, 2};
  for (int pairs = 1; pairs <= 3; ++pairs) {
    const int slots = 2 * pairs;
    uint64_t total = 1;
    for (int i = 0; i < slots; ++i) total *= 4;
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t rest = code;
      std::vector<Syllable> syllables;
      for (int i = 0; i < slots; ++i) {
        syllables.push_back({i % 2 == 0 ? Generator::kA : Generator::kB,
                             kExponents[rest & 3]});
        rest >>= 2;
      }
      const Word w = WordFromSyllables(syllables);
      CAPTURE(wordarea::FormatWord(w, wordarea::FormatStyle::kCompressed));
      CHECK(AreaPowerRelators(w).area == oracle.AreaPowers(w));
    }
  }
}

TEST_CASE("matches the reference solver on random raw words") {
  Oracle oracle;
  testutil::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text =
        testutil::RandomRuns(rng, 1 + (int)rng.Below(12));
    const Word w = ParseWord(text);
    CAPTURE(text);
    CHECK(AreaPowerRelators(w).area == oracle.AreaPowers(w));
    CheckWitnessRoundTrip(w);
  }
}

TEST_CASE("subset criterion reports") {
  const auto no_subset = CheckSubsetCriterion(std::vector<long long>{1, 2});
  CHECK(no_subset.area == 3);
  CHECK_FALSE(no_subset.subset_exists);
  CHECK_FALSE(no_subset.area_within_count);
  CHECK(no_subset.equivalence_holds);
  CHECK(no_subset.upper_bound_holds);
  CHECK(wordarea::FormatWord(no_subset.word,
                             wordarea::FormatStyle::kCompressed) == "ababb");

  const auto with_subset =
      CheckSubsetCriterion(std::vector<long long>{1, -1});
  CHECK(with_subset.subset_exists);
  CHECK(with_subset.area <= 2);
  CHECK(with_subset.area_within_count);
  CHECK(with_subset.equivalence_holds);
  CHECK(with_subset.subset_witness == std::vector<int>{1, 2});

  const auto larger =
      CheckSubsetCriterion(std::vector<long long>{3, -1, -2, 5});
  CHECK(larger.subset_exists);
  CHECK(larger.area <= 4);
  CHECK(larger.equivalence_holds);
  CHECK(larger.upper_bound_holds);

  CHECK_THROWS_AS(CheckSubsetCriterion(std::vector<long long>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CheckSubsetCriterion(std::vector<long long>{1, 0}),
                  std::invalid_argument);
}

TEST_CASE("oversized inputs are rejected before allocation") {
  std::string text;
  for (int i = 0; i < 350; ++i) text += "ab";
  CHECK_THROWS_AS(AreaPowerRelators(ParseWord(text)), std::length_error);
}

}  // namespace
