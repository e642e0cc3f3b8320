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

#ifndef WORDAREA_WITNESS_H_
#define WORDAREA_WITNESS_H_

#include <string>
#include <utility>
#include <vector>

#include "word.h"

// Certificates that a claimed area is attainable, and their translation into
// executable move sequences. All positions are 1-based indices into the host
// word; a move's positions refer to the word as it stands when that move runs.

namespace wordarea {

enum class Presentation { kTrivial, kPowers };

// Non-crossing pairing of mutually inverse letters. Unpaired letters cost one
// deletion each, so a matching implies area size(w) - 2 * pairs.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (p, q) with p < q
};

// Non-crossing split of all positions into single-generator blocks. Blocks
// whose exponent sum is zero vanish by cancellation alone; the rest cost one
// deletion each, so the implied area is the number of nonzero blocks.
struct PartitionBlock {
  Generator gen;
  std::vector<int> positions;  // ascending
};

struct NonCrossingPartition {
  std::vector<PartitionBlock> blocks;
};

struct WitnessCheck {
  bool ok = false;
  long long implied_area = 0;
  std::string reason;  // empty when ok
};

// Structural checks. Positions out of range (or, for partitions, a family
// that is not a partition of 1..size) throw std::invalid_argument; soft
// failures such as crossings come back as ok=false with a reason.
WitnessCheck ValidateMatching(const Word& w, const Matching& m);
WitnessCheck ValidatePartition(const Word& w, const NonCrossingPartition& p);

struct NullMove {
  enum class Kind { kDelete, kCancel };
  Kind kind;
  int begin = 0;  // 1-based, inclusive
  int end = 0;    // kCancel: end == begin + 1
};

struct NullSequence {
  std::vector<NullMove> moves;

  long long cost() const;  // number of kDelete moves
};

// Compile a witness into moves that empty the word. Both throw
// std::invalid_argument when the witness does not validate.
NullSequence MatchingToNullSequence(const Word& w, const Matching& m);
NullSequence PartitionToNullSequence(const Word& w, const NonCrossingPartition& p);

struct ExecutionOutcome {
  bool emptied = false;
  long long cost = 0;
};

// Replays the moves against w under the rules of the given presentation:
// kCancel removes an adjacent mutually inverse pair in either mode; kDelete
// removes one letter (trivial) or one single-generator, single-sign run
// (powers). An illegal move throws std::invalid_argument naming the move.
ExecutionOutcome ExecuteNullSequence(const Word& w, const NullSequence& ns,
                                     Presentation mode);

}  // namespace wordarea

#endif  // WORDAREA_WITNESS_H_
