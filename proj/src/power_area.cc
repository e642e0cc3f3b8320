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

#include "power_area.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "subset_sum.h"

namespace wordarea {

namespace {

constexpr long long kMaxCells = 1LL << 27;

// Candidate splits of last(j, k, r), r != 0, in tie order: ascending l, and
// at each l the split after b-syllable l before the split after a-syllable l.
// Splitting after b-syllable l detaches a whole-prefix face; splitting after
// a-syllable l rolls that syllable into the prefix face's leading run (or,
// at the edges, detaches a single-run face).
template <typename Visit>
void ForEachLastTerm(const AreaTables& t, int j, int k, long long r,
                     Visit&& visit) {
  for (int l = j; l <= k; ++l) {
    if (l < k) {
      visit(t.first(t.ia(j), j, l) + t.last(l + 1, k, r), l, true);
    }
    if (l == j) {
      visit(1 + t.last(j + 1, k, t.ib(j) + r), l, false);
    } else if (l < k) {
      visit(t.first(t.ia(j) + t.ia(l), j, l - 1) + t.last(l + 1, k, t.ib(l) + r),
            l, false);
    } else {
      visit(t.first(t.ia(j) + t.ia(k), j, k - 1) + PowArea(r), l, false);
    }
  }
}

// Likewise for first(r, j, k), r != 0.
template <typename Visit>
void ForEachFirstTerm(const AreaTables& t, long long r, int j, int k,
                      Visit&& visit) {
  for (int l = j; l <= k; ++l) {
    if (l < k) {
      visit(t.first(r, j, l) + t.last(l + 1, k, t.ib(k)), l, true);
    }
    if (l == j) {
      visit(PowArea(r) + t.last(j + 1, k, t.ib(j) + t.ib(k)), l, false);
    } else if (l < k) {
      visit(t.first(r + t.ia(l), j, l - 1) + t.last(l + 1, k, t.ib(k) + t.ib(l)),
            l, false);
    } else {
      visit(t.first(r + t.ia(k), j, k - 1) + 1, l, false);
    }
  }
}

}  // namespace

int PowArea(long long e) { return e == 0 ? 0 : 1; }

AreaTables::AreaTables(const SyllableWord& sw) {
  const auto& syl = sw.syllables;
  if (syl.empty() || syl.size() % 2 != 0) {
    throw std::invalid_argument("area tables need an alternating a,b,... word");
  }
  n_ = 0;
  for (size_t t = 0; t < syl.size(); ++t) {
    Generator expect = t % 2 == 0 ? Generator::kA : Generator::kB;
    if (syl[t].gen != expect || syl[t].exponent == 0) {
      throw std::invalid_argument("area tables need an alternating a,b,... word");
    }
    n_ += std::llabs(syl[t].exponent);
    if (t % 2 == 0) {
      ia_.push_back(syl[t].exponent);
    } else {
      ib_.push_back(syl[t].exponent);
    }
  }
  m_ = static_cast<int>(ia_.size());
  const long long cells = 2LL * m_ * m_ * (2 * n_ + 1);
  if (cells > kMaxCells) {
    throw std::length_error("word too long for the area tables");
  }
  last_.assign(static_cast<size_t>(cells / 2), kInfinity);
  first_.assign(static_cast<size_t>(cells / 2), kInfinity);
}

int32_t AreaTables::Answer() const { return first(ia(1), 1, m_); }

AreaTables ComputeAreaTables(const SyllableWord& sw) {
  AreaTables t(sw);
  const int m = t.m_;
  const long long n = t.n_;

  for (int j = 1; j <= m; ++j) {
    for (long long r = -n; r <= n; ++r) {
      const int32_t base = 1 + PowArea(r);
      t.last_[t.Index(j, j, r)] = base;
      t.first_[t.Index(j, j, r)] = base;
    }
  }

  for (int s = 1; s < m; ++s) {
    for (int j = 1; j + s <= m; ++j) {
      const int k = j + s;
      // r = 0 leaves one run empty, so the word rotates into a shorter state
      // with the two runs at the seam merged.
      t.last_[t.Index(j, k, 0)] = t.first(t.ia(j) + t.ia(k), j, k - 1);
      t.first_[t.Index(j, k, 0)] = t.last(j + 1, k, t.ib(j) + t.ib(k));
      for (long long r = -n; r <= n; ++r) {
        if (r == 0) continue;
        int32_t best_last = AreaTables::kInfinity;
        ForEachLastTerm(t, j, k, r, [&](int32_t v, int, bool) {
          best_last = std::min(best_last, v);
        });
        t.last_[t.Index(j, k, r)] = best_last;
        int32_t best_first = AreaTables::kInfinity;
        ForEachFirstTerm(t, r, j, k, [&](int32_t v, int, bool) {
          best_first = std::min(best_first, v);
        });
        t.first_[t.Index(j, k, r)] = best_first;
      }
    }
  }
  return t;
}

namespace {

// Rebuilds one minimizing split tree from the filled tables. A state owns a
// contiguous syllable range plus the fragments merged into its replacement
// run; every fragment is a whole syllable of the original word, so emitted
// blocks are unions of syllables.
class PartitionBuilder {
 public:
  explicit PartitionBuilder(const AreaTables& t) : t_(t) {
    const int m = t.m();
    long long pos = 1;
    ranges_.resize(static_cast<size_t>(2) * m);
    for (int j = 1; j <= m; ++j) {
      ranges_[AId(j)] = {pos, pos + std::llabs(t.ia(j))};
      pos += std::llabs(t.ia(j));
      ranges_[BId(j)] = {pos, pos + std::llabs(t.ib(j))};
      pos += std::llabs(t.ib(j));
    }
  }

  NonCrossingPartition Build() {
    TraceFirst({AId(1)}, t_.ia(1), 1, t_.m());
    std::sort(out_.blocks.begin(), out_.blocks.end(),
              [](const PartitionBlock& x, const PartitionBlock& y) {
                return x.positions.front() < y.positions.front();
              });
    return std::move(out_);
  }

 private:
  static size_t AId(int j) { return static_cast<size_t>(2) * (j - 1); }
  static size_t BId(int j) { return static_cast<size_t>(2) * (j - 1) + 1; }

  void Emit(Generator gen, std::vector<size_t> ids) {
    PartitionBlock block;
    block.gen = gen;
    for (size_t id : ids) {
      for (long long p = ranges_[id].first; p < ranges_[id].second; ++p) {
        block.positions.push_back(static_cast<int>(p));
      }
    }
    std::sort(block.positions.begin(), block.positions.end());
    out_.blocks.push_back(std::move(block));
  }

  // frag: b-syllable ids merged into the trailing run, summing to r.
  void TraceLast(int j, int k, std::vector<size_t> frag, long long r) {
    if (j == k) {
      Emit(Generator::kA, {AId(j)});
      Emit(Generator::kB, std::move(frag));
      return;
    }
    if (r == 0) {
      Emit(Generator::kB, std::move(frag));
      TraceFirst({AId(k), AId(j)}, t_.ia(j) + t_.ia(k), j, k - 1);
      return;
    }
    const int32_t want = t_.last(j, k, r);
    int pick_l = -1;
    bool pick_boundary = false;
    ForEachLastTerm(t_, j, k, r, [&](int32_t v, int l, bool boundary) {
      if (pick_l == -1 && v == want) {
        pick_l = l;
        pick_boundary = boundary;
      }
    });
    if (pick_l == -1) throw std::logic_error("area table traceback lost the minimum");
    if (pick_boundary) {
      TraceFirst({AId(j)}, t_.ia(j), j, pick_l);
      TraceLast(pick_l + 1, k, std::move(frag), r);
    } else if (pick_l == j) {
      Emit(Generator::kA, {AId(j)});
      frag.push_back(BId(j));
      TraceLast(j + 1, k, std::move(frag), t_.ib(j) + r);
    } else if (pick_l < k) {
      TraceFirst({AId(pick_l), AId(j)}, t_.ia(j) + t_.ia(pick_l), j, pick_l - 1);
      frag.push_back(BId(pick_l));
      TraceLast(pick_l + 1, k, std::move(frag), t_.ib(pick_l) + r);
    } else {
      TraceFirst({AId(k), AId(j)}, t_.ia(j) + t_.ia(k), j, k - 1);
      Emit(Generator::kB, std::move(frag));
    }
  }

  // frag: a-syllable ids merged into the leading run, summing to r.
  void TraceFirst(std::vector<size_t> frag, long long r, int j, int k) {
    if (j == k) {
      Emit(Generator::kA, std::move(frag));
      Emit(Generator::kB, {BId(j)});
      return;
    }
    if (r == 0) {
      Emit(Generator::kA, std::move(frag));
      TraceLast(j + 1, k, {BId(k), BId(j)}, t_.ib(j) + t_.ib(k));
      return;
    }
    const int32_t want = t_.first(r, j, k);
    int pick_l = -1;
    bool pick_boundary = false;
    ForEachFirstTerm(t_, r, j, k, [&](int32_t v, int l, bool boundary) {
      if (pick_l == -1 && v == want) {
        pick_l = l;
        pick_boundary = boundary;
      }
    });
    if (pick_l == -1) throw std::logic_error("area table traceback lost the minimum");
    if (pick_boundary) {
      TraceFirst(frag, r, j, pick_l);
      TraceLast(pick_l + 1, k, {BId(k)}, t_.ib(k));
    } else if (pick_l == j) {
      Emit(Generator::kA, std::move(frag));
      TraceLast(j + 1, k, {BId(k), BId(j)}, t_.ib(j) + t_.ib(k));
    } else if (pick_l < k) {
      frag.push_back(AId(pick_l));
      TraceFirst(std::move(frag), r + t_.ia(pick_l), j, pick_l - 1);
      TraceLast(pick_l + 1, k, {BId(k), BId(pick_l)}, t_.ib(k) + t_.ib(pick_l));
    } else {
      frag.push_back(AId(k));
      TraceFirst(std::move(frag), r + t_.ia(k), j, k - 1);
      Emit(Generator::kB, {BId(k)});
    }
  }

  const AreaTables& t_;
  std::vector<std::pair<long long, long long>> ranges_;  // [begin, end)
  NonCrossingPartition out_;
};

}  // namespace

NonCrossingPartition TracebackPartition(const AreaTables& tables) {
  return PartitionBuilder(tables).Build();
}

PowersArea AreaPowerRelators(const Word& w) {
  PowersArea result;
  result.canonical = CyclicCanonicalize(w);
  switch (result.canonical.kind) {
    case CanonicalForm::Kind::kEmpty:
      result.area = 0;
      break;
    case CanonicalForm::Kind::kPower: {
      result.area = 1;
      PartitionBlock block;
      block.gen = result.canonical.syllables[0].gen;
      for (int p = 1; p <= static_cast<int>(result.canonical.word.size()); ++p) {
        block.positions.push_back(p);
      }
      result.partition.blocks.push_back(std::move(block));
      break;
    }
    case CanonicalForm::Kind::kAlternating: {
      SyllableWord sw = MakeSyllableWord(result.canonical.syllables);
      AreaTables tables = ComputeAreaTables(sw);
      result.area = tables.Answer();
      result.partition = TracebackPartition(tables);
      break;
    }
  }
  return result;
}

CriterionReport CheckSubsetCriterion(std::span<const long long> entries) {
  if (entries.empty()) {
    throw std::invalid_argument("criterion check needs at least one exponent");
  }
  CriterionReport report;
  report.entries.assign(entries.begin(), entries.end());
  std::vector<Syllable> syllables;
  syllables.reserve(2 * entries.size());
  for (long long e : entries) {
    if (e == 0) throw std::invalid_argument("exponents must be nonzero");
    syllables.push_back(Syllable{Generator::kA, 1});
    syllables.push_back(Syllable{Generator::kB, e});
  }
  report.word = WordFromSyllables(syllables);

  PowersArea area = AreaPowerRelators(report.word);
  report.area = area.area;
  ZeroSubset subset = FindZeroSubset(entries);
  report.subset_exists = subset.exists;
  report.subset_witness = std::move(subset.witness);

  const long long k = static_cast<long long>(entries.size());
  report.area_within_count = report.area <= k;
  report.equivalence_holds = report.area_within_count == report.subset_exists;
  report.upper_bound_holds = report.area <= k + 1;
  return report;
}

}  // namespace wordarea
