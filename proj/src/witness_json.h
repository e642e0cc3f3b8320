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

#ifndef WORDAREA_WITNESS_JSON_H_
#define WORDAREA_WITNESS_JSON_H_

#include <optional>
#include <string>

#include "witness.h"
#include "word.h"

// Wire form of a witness:
//   {"word": "...", "mode": "trivial", "area": 2, "matching": [[1,5],[2,4]]}
//   {"word": "...", "mode": "powers", "area": 2,
//    "partition": [{"letter": "a", "positions": [1,2]}, ...]}
// `word` is the compressed spelling of the host word, so positions index its
// characters directly.

namespace wordarea {

struct WitnessEnvelope {
  Word word;
  Presentation mode = Presentation::kTrivial;
  long long area = 0;
  std::optional<Matching> matching;
  std::optional<NonCrossingPartition> partition;
};

std::string MatchingWitnessJson(const Word& word, long long area,
                                const Matching& matching);
std::string PartitionWitnessJson(const Word& word, long long area,
                                 const NonCrossingPartition& partition);

// Parses either variant; throws std::invalid_argument on schema violations.
WitnessEnvelope ParseWitnessJson(const std::string& text);

// {"kind": ..., "word": ..., "conjugator": ..., "cancelled_pairs": ...,
//  "rotation": ..., "source_positions": [...]}
std::string CanonicalFormJson(const CanonicalForm& form);

}  // namespace wordarea

#endif  // WORDAREA_WITNESS_JSON_H_
