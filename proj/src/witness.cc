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

#include "witness.h"

#include <algorithm>
#include <stdexcept>

namespace wordarea {

namespace {

std::string MoveError(size_t index, const std::string& reason) {
  return "move " + std::to_string(index + 1) + ": " + reason;
}

}  // namespace

WitnessCheck ValidateMatching(const Word& w, const Matching& m) {
  const int n = static_cast<int>(w.size());
  WitnessCheck check;
  check.implied_area = n - 2 * static_cast<long long>(m.pairs.size());
  std::vector<char> used(n + 1, 0);
  for (const auto& [p, q] : m.pairs) {
    if (p < 1 || p > n || q < 1 || q > n) {
      throw std::invalid_argument("matching index out of range");
    }
    if (p >= q) {
      check.reason = "pair is not ordered";
      return check;
    }
    if (used[p] || used[q]) {
      check.reason = "position appears in two pairs";
      return check;
    }
    used[p] = used[q] = 1;
    if (!(w.letters[p - 1] == w.letters[q - 1].Inverse())) {
      check.reason = "paired letters are not mutually inverse";
      return check;
    }
  }
  for (size_t i = 0; i < m.pairs.size(); ++i) {
    for (size_t j = i + 1; j < m.pairs.size(); ++j) {
      auto [p1, q1] = m.pairs[i];
      auto [p2, q2] = m.pairs[j];
      if (p2 < p1) {
        std::swap(p1, p2);
        std::swap(q1, q2);
      }
      if (p1 < p2 && p2 < q1 && q1 < q2) {
        check.reason = "pairs cross";
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

WitnessCheck ValidatePartition(const Word& w, const NonCrossingPartition& p) {
  const int n = static_cast<int>(w.size());
  WitnessCheck check;
  std::vector<int> block_of(n + 1, -1);
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].positions.empty()) {
      throw std::invalid_argument("partition block is empty");
    }
    for (int pos : p.blocks[b].positions) {
      if (pos < 1 || pos > n) {
        throw std::invalid_argument("partition index out of range");
      }
      if (block_of[pos] != -1) {
        throw std::invalid_argument("partition repeats a position");
      }
      block_of[pos] = static_cast<int>(b);
    }
  }
  for (int pos = 1; pos <= n; ++pos) {
    if (block_of[pos] == -1) {
      throw std::invalid_argument("partition misses a position");
    }
  }

  for (const PartitionBlock& block : p.blocks) {
    long long sum = 0;
    for (size_t t = 0; t < block.positions.size(); ++t) {
      if (t > 0 && block.positions[t] <= block.positions[t - 1]) {
        check.reason = "block positions are not ascending";
        return check;
      }
      const Letter& l = w.letters[block.positions[t] - 1];
      if (l.gen != block.gen) {
        check.reason = "block mixes generators";
        return check;
      }
      sum += l.sign;
    }
    if (sum != 0) ++check.implied_area;
  }

  // Non-crossing: sweeping the word, only the innermost open block may
  // continue or close.
  std::vector<int> first(p.blocks.size()), last(p.blocks.size());
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    first[b] = p.blocks[b].positions.front();
    last[b] = p.blocks[b].positions.back();
  }
  std::vector<int> stack;
  for (int pos = 1; pos <= n; ++pos) {
    int b = block_of[pos];
    if (pos == first[b]) {
      stack.push_back(b);
    } else if (stack.empty() || stack.back() != b) {
      check.reason = "blocks cross";
      check.implied_area = 0;
      return check;
    }
    if (pos == last[b]) stack.pop_back();
  }
  check.ok = true;
  return check;
}

long long NullSequence::cost() const {
  long long deletions = 0;
  for (const NullMove& move : moves) {
    if (move.kind == NullMove::Kind::kDelete) ++deletions;
  }
  return deletions;
}

NullSequence MatchingToNullSequence(const Word& w, const Matching& m) {
  WitnessCheck check = ValidateMatching(w, m);
  if (!check.ok) {
    throw std::invalid_argument("matching does not validate: " + check.reason);
  }
  const int n = static_cast<int>(w.size());
  std::vector<int> partner(n + 1, 0);
  for (const auto& [p, q] : m.pairs) {
    partner[p] = q;
    partner[q] = p;
  }

  NullSequence ns;
  std::vector<int> current;  // original positions still standing
  current.reserve(n);
  for (int pos = 1; pos <= n; ++pos) current.push_back(pos);

  // Unmatched letters go first, left to right.
  for (size_t t = 0; t < current.size();) {
    if (partner[current[t]] == 0) {
      ns.moves.push_back(NullMove{NullMove::Kind::kDelete,
                                  static_cast<int>(t) + 1,
                                  static_cast<int>(t) + 1});
      current.erase(current.begin() + static_cast<long>(t));
    } else {
      ++t;
    }
  }

  // What remains is perfectly matched without crossings, so some matched pair
  // is adjacent; cancel the leftmost such pair until nothing is left.
  while (!current.empty()) {
    bool found = false;
    for (size_t t = 0; t + 1 < current.size(); ++t) {
      if (partner[current[t]] == current[t + 1]) {
        ns.moves.push_back(NullMove{NullMove::Kind::kCancel,
                                    static_cast<int>(t) + 1,
                                    static_cast<int>(t) + 2});
        current.erase(current.begin() + static_cast<long>(t),
                      current.begin() + static_cast<long>(t) + 2);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("matched pairs lost adjacency");  // unreachable
    }
  }
  return ns;
}

NullSequence PartitionToNullSequence(const Word& w, const NonCrossingPartition& p) {
  WitnessCheck check = ValidatePartition(w, p);
  if (!check.ok) {
    throw std::invalid_argument("partition does not validate: " + check.reason);
  }
  const int n = static_cast<int>(w.size());
  std::vector<int> block_of(n + 1, 0);
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    for (int pos : p.blocks[b].positions) block_of[pos] = static_cast<int>(b);
  }

  NullSequence ns;
  std::vector<int> current;
  current.reserve(n);
  for (int pos = 1; pos <= n; ++pos) current.push_back(pos);
  std::vector<char> done(p.blocks.size(), 0);

  for (size_t remaining = p.blocks.size(); remaining > 0; --remaining) {
    // The narrowest remaining block is contiguous in the current word.
    int best = -1, best_lo = 0, best_hi = 0;
    std::vector<int> lo(p.blocks.size(), n + 1), hi(p.blocks.size(), -1);
    for (size_t t = 0; t < current.size(); ++t) {
      int b = block_of[current[t]];
      lo[b] = std::min(lo[b], static_cast<int>(t));
      hi[b] = std::max(hi[b], static_cast<int>(t));
    }
    for (size_t b = 0; b < p.blocks.size(); ++b) {
      if (done[b]) continue;
      if (best == -1 || hi[b] - lo[b] < best_hi - best_lo ||
          (hi[b] - lo[b] == best_hi - best_lo && lo[b] < best_lo)) {
        best = static_cast<int>(b);
        best_lo = lo[b];
        best_hi = hi[b];
      }
    }
    if (best_hi - best_lo + 1 != static_cast<int>(p.blocks[best].positions.size())) {
      throw std::logic_error("minimal-span block is not contiguous");  // unreachable
    }

    // Cancel away adjacent opposite signs inside the run, then delete what
    // remains in one move (nothing remains for a zero-sum block).
    int run_lo = best_lo, run_hi = best_hi;
    while (true) {
      bool cancworked = false;
      for (int t = run_lo; t < run_hi; ++t) {
        const Letter& x = w.letters[current[t] - 1];
        const Letter& y = w.letters[current[t + 1] - 1];
        if (x.sign != y.sign) {
          ns.moves.push_back(NullMove{NullMove::Kind::kCancel, t + 1, t + 2});
          current.erase(current.begin() + t, current.begin() + t + 2);
          run_hi -= 2;
          cancworked = true;
          break;
        }
      }
      if (!cancworked) break;
    }
    if (run_hi >= run_lo) {
      ns.moves.push_back(NullMove{NullMove::Kind::kDelete, run_lo + 1, run_hi + 1});
      current.erase(current.begin() + run_lo, current.begin() + run_hi + 1);
    }
    done[best] = 1;
  }
  return ns;
}

ExecutionOutcome ExecuteNullSequence(const Word& w, const NullSequence& ns,
                                     Presentation mode) {
  std::vector<Letter> current = w.letters;
  ExecutionOutcome outcome;
  for (size_t mi = 0; mi < ns.moves.size(); ++mi) {
    const NullMove& move = ns.moves[mi];
    const int len = static_cast<int>(current.size());
    if (move.begin < 1 || move.end < move.begin || move.end > len) {
      throw std::invalid_argument(MoveError(mi, "positions out of range"));
    }
    if (move.kind == NullMove::Kind::kCancel) {
      if (move.end != move.begin + 1) {
        throw std::invalid_argument(MoveError(mi, "cancel needs two adjacent positions"));
      }
      if (!(current[move.begin - 1] == current[move.end - 1].Inverse())) {
        throw std::invalid_argument(MoveError(mi, "letters are not mutually inverse"));
      }
    } else {
      if (mode == Presentation::kTrivial && move.end != move.begin) {
        throw std::invalid_argument(MoveError(mi, "deletion must take one letter"));
      }
      for (int t = move.begin; t < move.end; ++t) {
        if (!(current[t] == current[move.begin - 1])) {
          throw std::invalid_argument(
              MoveError(mi, "deleted run mixes letters"));
        }
      }
      ++outcome.cost;
    }
    current.erase(current.begin() + (move.begin - 1),
                  current.begin() + move.end);
  }
  outcome.emptied = current.empty();
  return outcome;
}

}  // namespace wordarea
