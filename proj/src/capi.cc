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

#include "wordarea/wordarea.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oracle.h"
#include "power_area.h"
#include "spelling.h"
#include "subset_sum.h"
#include "witness.h"
#include "witness_json.h"
#include "word.h"

struct wa_word {
  wordarea::Word word;
};

// The witness lives over `host`: the input itself in the trivial
// presentation, the canonical cyclic word in the powers presentation.
struct wa_result {
  wordarea::Presentation mode;
  int area = 0;
  wordarea::Word input;
  wordarea::Word host;
  std::optional<wordarea::Matching> matching;
  std::optional<wordarea::NonCrossingPartition> partition;
  std::string witness_json;
  std::string canonical_json;
};

struct wa_oracle {
  explicit wa_oracle(int max_length, int partition_max_length)
      : oracle(max_length, partition_max_length) {}
  wordarea::Oracle oracle;
};

namespace {

thread_local std::string t_last_error;

wa_status Fail(wa_status status, const char* message) {
  t_last_error = message;
  return status;
}

// Runs `fn` and folds any thrown error into a status plus t_last_error.
template <typename Fn>
wa_status Guard(Fn&& fn) {
  try {
    return fn();
  } catch (const wordarea::ParseError& e) {
    return Fail(WA_ERR_PARSE, e.what());
  } catch (const std::length_error& e) {
    return Fail(WA_ERR_LIMIT, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(WA_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return Fail(WA_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& text) {
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (copy != nullptr) std::memcpy(copy, text.c_str(), text.size() + 1);
  return copy;
}

wordarea::Presentation ToPresentation(wa_presentation presentation) {
  if (presentation != WA_PRESENTATION_TRIVIAL &&
      presentation != WA_PRESENTATION_POWERS) {
    throw std::invalid_argument("unknown presentation");
  }
  return presentation == WA_PRESENTATION_TRIVIAL
             ? wordarea::Presentation::kTrivial
             : wordarea::Presentation::kPowers;
}

}  // namespace

extern "C" {

const char* wa_version(void) { return "0.1.0"; }

const char* wa_last_error(void) { return t_last_error.c_str(); }

const char* wa_status_name(wa_status status) {
  switch (status) {
    case WA_OK:
      return "WA_OK";
    case WA_ERR_PARSE:
      return "WA_ERR_PARSE";
    case WA_ERR_ARGUMENT:
      return "WA_ERR_ARGUMENT";
    case WA_ERR_LIMIT:
      return "WA_ERR_LIMIT";
    case WA_ERR_VERIFY:
      return "WA_ERR_VERIFY";
    case WA_ERR_INTERNAL:
      return "WA_ERR_INTERNAL";
  }
  return "WA_ERR_INTERNAL";
}

void wa_string_free(char* text) { std::free(text); }

wa_status wa_word_parse(const char* text, wa_word** out_word) {
  if (text == nullptr || out_word == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    auto handle = new wa_word{wordarea::ParseWord(text)};
    *out_word = handle;
    return WA_OK;
  });
}

void wa_word_free(wa_word* word) { delete word; }

int64_t wa_word_length(const wa_word* word) {
  if (word == nullptr) return -1;
  return static_cast<int64_t>(word->word.letters.size());
}

wa_status wa_word_format(const wa_word* word, wa_format_style style,
                         char** out_text) {
  if (word == nullptr || out_text == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  if (style != WA_FORMAT_COMPRESSED && style != WA_FORMAT_CARET) {
    return Fail(WA_ERR_ARGUMENT, "unknown format style");
  }
  return Guard([&] {
    const auto text = wordarea::FormatWord(
        word->word, style == WA_FORMAT_COMPRESSED
                        ? wordarea::FormatStyle::kCompressed
                        : wordarea::FormatStyle::kCaret);
    *out_text = CopyString(text);
    return *out_text != nullptr ? WA_OK
                                : Fail(WA_ERR_INTERNAL, "out of memory");
  });
}

wa_status wa_word_free_reduce(const wa_word* word, wa_word** out_word) {
  if (word == nullptr || out_word == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out_word = new wa_word{wordarea::FreeReduce(word->word)};
    return WA_OK;
  });
}

wa_status wa_word_invert(const wa_word* word, wa_word** out_word) {
  if (word == nullptr || out_word == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out_word = new wa_word{wordarea::Invert(word->word)};
    return WA_OK;
  });
}

wa_status wa_word_rotate(const wa_word* word, int64_t offset,
                         wa_word** out_word) {
  if (word == nullptr || out_word == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  const auto length = static_cast<int64_t>(word->word.letters.size());
  if (offset < 0 || offset > length) {
    return Fail(WA_ERR_ARGUMENT, "rotation offset out of range");
  }
  return Guard([&] {
    *out_word =
        new wa_word{wordarea::Rotate(word->word, static_cast<size_t>(offset))};
    return WA_OK;
  });
}

wa_status wa_word_canonical_json(const wa_word* word, char** out_json) {
  if (word == nullptr || out_json == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    const auto form = wordarea::CyclicCanonicalize(word->word);
    *out_json = CopyString(wordarea::CanonicalFormJson(form));
    return *out_json != nullptr ? WA_OK
                                : Fail(WA_ERR_INTERNAL, "out of memory");
  });
}

wa_status wa_area(const wa_word* word, wa_presentation presentation,
                  wa_result** out_result) {
  if (word == nullptr || out_result == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    const auto mode = ToPresentation(presentation);
    auto result = std::make_unique<wa_result>();
    result->mode = mode;
    result->input = word->word;
    if (mode == wordarea::Presentation::kTrivial) {
      auto trivial = wordarea::AreaFreeTrivial(word->word);
      result->area = trivial.area;
      result->host = word->word;
      result->witness_json = wordarea::MatchingWitnessJson(
          result->host, trivial.area, trivial.matching);
      result->matching = std::move(trivial.matching);
      result->canonical_json =
          wordarea::CanonicalFormJson(wordarea::CyclicCanonicalize(word->word));
    } else {
      auto powers = wordarea::AreaPowerRelators(word->word);
      result->area = powers.area;
      result->host = powers.canonical.word;
      result->witness_json = wordarea::PartitionWitnessJson(
          result->host, powers.area, powers.partition);
      result->partition = std::move(powers.partition);
      result->canonical_json = wordarea::CanonicalFormJson(powers.canonical);
    }
    *out_result = result.release();
    return WA_OK;
  });
}

void wa_result_free(wa_result* result) { delete result; }

int64_t wa_result_area(const wa_result* result) {
  if (result == nullptr) return -1;
  return result->area;
}

const char* wa_result_witness_json(const wa_result* result) {
  if (result == nullptr) return nullptr;
  return result->witness_json.c_str();
}

const char* wa_result_canonical_json(const wa_result* result) {
  if (result == nullptr) return nullptr;
  return result->canonical_json.c_str();
}

wa_status wa_result_verify(const wa_result* result) {
  if (result == nullptr) return Fail(WA_ERR_ARGUMENT, "null result handle");
  return Guard([&]() -> wa_status {
    wordarea::WitnessCheck check;
    wordarea::NullSequence moves;
    if (result->mode == wordarea::Presentation::kTrivial) {
      if (!result->matching.has_value()) {
        return Fail(WA_ERR_VERIFY, "result carries no matching witness");
      }
      check = wordarea::ValidateMatching(result->host, *result->matching);
      if (check.ok) {
        moves =
            wordarea::MatchingToNullSequence(result->host, *result->matching);
      }
    } else {
      if (!result->partition.has_value()) {
        return Fail(WA_ERR_VERIFY, "result carries no partition witness");
      }
      check = wordarea::ValidatePartition(result->host, *result->partition);
      if (check.ok) {
        moves =
            wordarea::PartitionToNullSequence(result->host, *result->partition);
      }
      // The witness covers the canonical cyclic word, so tie that word back
      // to the input: input = conjugator . host . conjugator^-1 freely.
      const auto form = wordarea::CyclicCanonicalize(result->input);
      const auto replay = wordarea::FreeReduce(wordarea::Concat(
          form.conjugator,
          wordarea::Concat(result->host, wordarea::Invert(form.conjugator))));
      const auto reduced_input = wordarea::FreeReduce(result->input);
      if (replay.letters != reduced_input.letters) {
        return Fail(WA_ERR_VERIFY,
                    "canonical word does not conjugate back to the input");
      }
    }
    if (!check.ok) {
      t_last_error = "witness rejected: " + check.reason;
      return WA_ERR_VERIFY;
    }
    if (check.implied_area != result->area) {
      return Fail(WA_ERR_VERIFY, "witness cost disagrees with reported area");
    }
    const auto outcome =
        wordarea::ExecuteNullSequence(result->host, moves, result->mode);
    if (!outcome.emptied) {
      return Fail(WA_ERR_VERIFY, "replayed moves do not empty the word");
    }
    if (outcome.cost != result->area) {
      return Fail(WA_ERR_VERIFY, "replayed moves disagree with the area");
    }
    return WA_OK;
  });
}

wa_status wa_oracle_create(int32_t max_length, int32_t partition_max_length,
                           wa_oracle** out_oracle) {
  if (out_oracle == nullptr) return Fail(WA_ERR_ARGUMENT, "null argument");
  return Guard([&] {
    const int length_bound = max_length > 0
                                 ? static_cast<int>(max_length)
                                 : wordarea::Oracle::kDefaultMaxLength;
    const int partition_bound =
        partition_max_length > 0
            ? static_cast<int>(partition_max_length)
            : wordarea::Oracle::kDefaultPartitionMaxLength;
    *out_oracle = new wa_oracle(length_bound, partition_bound);
    return WA_OK;
  });
}

void wa_oracle_free(wa_oracle* oracle) { delete oracle; }

wa_status wa_oracle_area(wa_oracle* oracle, const wa_word* word,
                         wa_presentation presentation, int64_t* out_area) {
  if (oracle == nullptr || word == nullptr || out_area == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    const auto mode = ToPresentation(presentation);
    const int area = mode == wordarea::Presentation::kTrivial
                         ? oracle->oracle.AreaTrivial(word->word)
                         : oracle->oracle.AreaPowers(word->word);
    *out_area = area;
    return WA_OK;
  });
}

wa_status wa_oracle_partition_min(wa_oracle* oracle, const wa_word* word,
                                  int64_t* out_area) {
  if (oracle == nullptr || word == nullptr || out_area == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    *out_area = oracle->oracle.PartitionMin(word->word);
    return WA_OK;
  });
}

wa_status wa_zero_subset(const int64_t* entries, size_t count,
                         int32_t* out_exists, size_t* witness,
                         size_t* out_witness_len) {
  if (out_exists == nullptr || (entries == nullptr && count > 0)) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  if (count == 0) {
    *out_exists = 0;
    if (out_witness_len != nullptr) *out_witness_len = 0;
    return WA_OK;
  }
  return Guard([&] {
    const std::vector<long long> values(entries, entries + count);
    const auto found = wordarea::FindZeroSubset(values);
    *out_exists = found.exists ? 1 : 0;
    if (out_witness_len != nullptr) *out_witness_len = found.witness.size();
    if (witness != nullptr && found.exists) {
      for (size_t i = 0; i < found.witness.size(); ++i) {
        witness[i] = found.witness[i];
      }
    }
    return WA_OK;
  });
}

wa_status wa_criterion_check(const int64_t* entries, size_t count,
                             wa_criterion_report* out_report) {
  if (entries == nullptr || out_report == nullptr) {
    return Fail(WA_ERR_ARGUMENT, "null argument");
  }
  return Guard([&] {
    const std::vector<long long> values(entries, entries + count);
    const auto report = wordarea::CheckSubsetCriterion(values);
    out_report->area = report.area;
    out_report->subset_exists = report.subset_exists ? 1 : 0;
    out_report->area_within_count = report.area_within_count ? 1 : 0;
    out_report->equivalence_holds = report.equivalence_holds ? 1 : 0;
    out_report->upper_bound_holds = report.upper_bound_holds ? 1 : 0;
    return WA_OK;
  });
}

}  // extern "C"
