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

#include "oracle.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wordarea {

namespace {

char InverseChar(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  return '\0';
}

std::string Squeeze(const std::string& s, size_t from, size_t count) {
  std::string out;
  out.reserve(s.size() - count);
  out.append(s, 0, from);
  out.append(s, from + count, std::string::npos);
  return out;
}

void CheckLength(const Word& w, int bound, const char* what) {
  if (static_cast<int>(w.size()) > bound) {
    throw std::length_error(std::string(what) + ": length bound " +
                            std::to_string(bound) + " exceeded");
  }
}

}  // namespace

Oracle::Oracle(int max_length, int partition_max_length)
    : max_length_(max_length), partition_max_length_(partition_max_length) {}

long long Oracle::AreaTrivial(const Word& w) {
  CheckLength(w, max_length_, "oracle");
  return SolveTrivial(FormatWord(w, FormatStyle::kCompressed));
}

long long Oracle::AreaPowers(const Word& w) {
  CheckLength(w, max_length_, "oracle");
  return SolvePowers(FormatWord(w, FormatStyle::kCompressed));
}

int Oracle::SolveTrivial(const std::string& s) {
  if (s.empty()) return 0;
  if (auto it = memo_trivial_.find(s); it != memo_trivial_.end()) {
    return it->second;
  }
  int best = std::numeric_limits<int>::max();
  for (size_t t = 0; t + 1 < s.size(); ++t) {
    if (s[t + 1] == InverseChar(s[t])) {
      best = std::min(best, SolveTrivial(Squeeze(s, t, 2)));
    }
  }
  for (size_t t = 0; t < s.size(); ++t) {
    if (t > 0 && s[t] == s[t - 1]) continue;  // same residue either way
    best = std::min(best, 1 + SolveTrivial(Squeeze(s, t, 1)));
  }
  memo_trivial_.emplace(s, best);
  return best;
}

int Oracle::SolvePowers(const std::string& s) {
  if (s.empty()) return 0;
  if (auto it = memo_powers_.find(s); it != memo_powers_.end()) {
    return it->second;
  }
  int best = std::numeric_limits<int>::max();
  for (size_t t = 0; t + 1 < s.size(); ++t) {
    if (s[t + 1] == InverseChar(s[t])) {
      best = std::min(best, SolvePowers(Squeeze(s, t, 2)));
    }
  }
  for (size_t t = 0; t < s.size();) {
    size_t u = t;
    while (u < s.size() && s[u] == s[t]) ++u;
    // Deleting d letters anywhere inside one run leaves the same residue.
    for (size_t d = 1; d <= u - t; ++d) {
      best = std::min(best, 1 + SolvePowers(Squeeze(s, t, d)));
    }
    t = u;
  }
  memo_powers_.emplace(s, best);
  return best;
}

long long Oracle::PartitionMin(const Word& w) {
  CheckLength(w, partition_max_length_, "partition oracle");
  const int n = static_cast<int>(w.size());
  if (n == 0) return 0;

  std::vector<int> gen(n), sign(n);
  for (int t = 0; t < n; ++t) {
    gen[t] = static_cast<int>(w.letters[t].gen);
    sign[t] = w.letters[t].sign;
  }

  // part(i, j): cheapest partition of positions i..j (0-based, empty is 0).
  // open(i, j, g, s): an unfinished block with generator g has sum s so far
  // and may still take elements from i..j; gaps it skips close on their own.
  // Stored with j shifted by one so j = i-1 (nothing left) fits.
  const int jdim = n + 1, sdim = 2 * n + 1;
  part_.assign(static_cast<size_t>(n + 1) * jdim, 0);
  open_.assign(static_cast<size_t>(n + 1) * jdim * 2 * sdim, 0);
  auto part_at = [&](int i, int j) -> int16_t& {
    return part_[static_cast<size_t>(i) * jdim + (j + 1)];
  };
  auto open_at = [&](int i, int j, int g, int s) -> int16_t& {
    return open_[((static_cast<size_t>(i) * jdim + (j + 1)) * 2 + g) * sdim +
                 (s + n)];
  };

  for (int i = n; i >= 0; --i) {
    for (int j = i - 1; j < n; ++j) {
      if (j >= i) {
        // Freshly partition i..j: position i opens its block. Computed first
        // because the close option below reads it back.
        part_at(i, j) = open_at(i + 1, j, gen[i], sign[i]);
      }
      for (int g = 0; g < 2; ++g) {
        for (int s = -n; s <= n; ++s) {
          int best = (s == 0 ? 0 : 1) + part_at(i, j);
          for (int q = i; q <= j; ++q) {
            if (gen[q] != g) continue;
            const int s2 = s + sign[q];
            if (s2 < -n || s2 > n) continue;  // reachable sums stay in range
            best = std::min(best,
                            part_at(i, q - 1) + open_at(q + 1, j, g, s2));
          }
          open_at(i, j, g, s) = static_cast<int16_t>(best);
        }
      }
    }
  }
  return part_at(0, n - 1);
}

}  // namespace wordarea
