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
#include <vector>

#include "doctest.h"
#include "subset_sum.h"
#include "test_util.h"

namespace {

using wordarea::ComputeSubsetTable;
using wordarea::FindZeroSubset;
using wordarea::ValidateSubset;

// Reference: try all 2^k - 1 nonempty subsequences.
bool BruteForceExists(const std::vector<long long>& entries) {
  const size_t k = entries.size();
  for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
    long long sum = 0;
    for (size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1) sum += entries[i];
    }
    if (sum == 0) return true;
  }
  return false;
}

TEST_CASE("known instances") {
  CHECK_FALSE(FindZeroSubset(std::vector<long long>{1, 2}).exists);
  CHECK_FALSE(FindZeroSubset(std::vector<long long>{5}).exists);
  CHECK_FALSE(FindZeroSubset(std::vector<long long>{2, 2, -5}).exists);
  CHECK(FindZeroSubset(std::vector<long long>{1, -1}).witness ==
        std::vector<int>{1, 2});
  CHECK(FindZeroSubset(std::vector<long long>{3, -1, -2}).witness ==
        std::vector<int>{1, 2, 3});
  // The walk skips entries it can do without: 5 is dead weight here.
  CHECK(FindZeroSubset(std::vector<long long>{5, 1, -1}).witness ==
        std::vector<int>{2, 3});
  const auto empty = FindZeroSubset(std::vector<long long>{});
  CHECK_FALSE(empty.exists);
  CHECK(empty.witness.empty());
}

TEST_CASE("zero entries are rejected") {
  CHECK_THROWS_AS(FindZeroSubset(std::vector<long long>{1, 0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ComputeSubsetTable(std::vector<long long>{0}),
                  std::invalid_argument);
}

TEST_CASE("table cells match the suffix semantics") {
  const std::vector<long long> entries{2, -3, 1};
  const auto table = ComputeSubsetTable(entries);
  const long long n = 6;
  REQUIRE(table.k() == 3);
  REQUIRE(table.n() == n);
  for (int q = 1; q <= 3; ++q) {
    for (long long p = -n; p <= n; ++p) {
      bool expected = false;
      const int suffix = 3 - q + 1;
      for (uint64_t mask = 1; mask < (uint64_t{1} << suffix); ++mask) {
        long long sum = 0;
        for (int i = 0; i < suffix; ++i) {
          if ((mask >> i) & 1) sum += entries[static_cast<size_t>(q - 1 + i)];
        }
        if (sum == p) expected = true;
      }
      CAPTURE(p);
      CAPTURE(q);
      CHECK(table.reachable(p, q) == expected);
    }
  }
  // Out-of-range queries are simply unreachable.
  CHECK_FALSE(table.reachable(n + 1, 1));
  CHECK_FALSE(table.reachable(0, 4));
  CHECK_FALSE(table.reachable(0, 0));
}

TEST_CASE("matches brute force on every small instance") {
  std::vector<long long> entries;
  for (int k = 1; k <= 4; ++k) {
    entries.assign(static_cast<size_t>(k), 0);
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= 6;
    static constexpr long long kValues[] = {-3, -2, -1, 1, 2, 3};
    for (uint64_t code = 0; code < total; ++code) {
      uint64_t rest = code;
      for (int i = 0; i < k; ++i) {
        entries[static_cast<size_t>(i)] = kValues[rest % 6];
        rest /= 6;
      }
      CAPTURE(entries);
      const auto found = FindZeroSubset(entries);
      CHECK(found.exists == BruteForceExists(entries));
      if (found.exists) {
        CHECK(ValidateSubset(entries, found.witness));
      } else {
        CHECK(found.witness.empty());
      }
    }
  }
}

TEST_CASE("matches brute force on random instances") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng.Below(10));
    std::vector<long long> entries;
    for (int i = 0; i < k; ++i) {
      long long value = 1 + static_cast<long long>(rng.Below(9));
      if (rng.Below(2) == 0) value = -value;
      entries.push_back(value);
    }
    CAPTURE(entries);
    const auto found = FindZeroSubset(entries);
    CHECK(found.exists == BruteForceExists(entries));
    if (found.exists) CHECK(ValidateSubset(entries, found.witness));
  }
}

TEST_CASE("witness validation") {
  const std::vector<long long> entries{3, -1, -2, 4};
  CHECK(ValidateSubset(entries, std::vector<int>{1, 2, 3}));
  CHECK_FALSE(ValidateSubset(entries, std::vector<int>{1, 2}));   // sums to 2
  CHECK_FALSE(ValidateSubset(entries, std::vector<int>{}));       // empty
  CHECK_THROWS_AS(ValidateSubset(entries, std::vector<int>{0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ValidateSubset(entries, std::vector<int>{1, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ValidateSubset(entries, std::vector<int>{2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ValidateSubset(entries, std::vector<int>{2, 2}),
                  std::invalid_argument);
}

}  // namespace
