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

// Command line front end. Everything goes through the public C interface in
// wordarea/wordarea.h; this file never touches library internals.
//
// Exit codes: 0 success, 1 bad input or resource limit, 2 the library
// contradicted itself (oracle mismatch or a witness that fails to verify).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordarea/wordarea.h"

namespace {

using nlohmann::json;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { wa_string_free(ptr); }
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
};

struct OwnedWord {
  wa_word* ptr = nullptr;
  ~OwnedWord() { wa_word_free(ptr); }
  OwnedWord() = default;
  OwnedWord(const OwnedWord&) = delete;
  OwnedWord& operator=(const OwnedWord&) = delete;
};

struct OwnedResult {
  wa_result* ptr = nullptr;
  ~OwnedResult() { wa_result_free(ptr); }
  OwnedResult() = default;
  OwnedResult(const OwnedResult&) = delete;
  OwnedResult& operator=(const OwnedResult&) = delete;
};

struct OwnedOracle {
  wa_oracle* ptr = nullptr;
  ~OwnedOracle() { wa_oracle_free(ptr); }
  OwnedOracle() = default;
  OwnedOracle(const OwnedOracle&) = delete;
  OwnedOracle& operator=(const OwnedOracle&) = delete;
};

int ReportError(wa_status status) {
  std::cerr << "error: " << wa_last_error() << " ("
            << wa_status_name(status) << ")\n";
  return 1;
}

// splitmix64; fixed here so seeded runs repeat exactly on any platform.
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

std::string RandomLetterWord(Rng& rng, int length) {
  static constexpr char kAlphabet[] = {'a', 'A', 'b', 'B'};
  std::string text;
  text.reserve(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) {
    text += kAlphabet[rng.Below(4)];
  }
  return text;
}

// Short same-letter runs; exercises whole-run deletions better than
// letter-at-a-time noise does.
std::string RandomRunWord(Rng& rng, int length) {
  std::string text;
  while (static_cast<int>(text.size()) < length) {
    const char gen = rng.Below(2) == 0 ? 'a' : 'b';
    const char letter = rng.Below(2) == 0 ? gen : (gen == 'a' ? 'A' : 'B');
    int run = 1 + static_cast<int>(rng.Below(3));
    while (run-- > 0 && static_cast<int>(text.size()) < length) {
      text += letter;
    }
  }
  return text;
}

// Strictly alternating a- and b-syllables with exponents in [-4,4]\{0}; the
// result is freely and cyclically reduced by construction.
std::string RandomSyllableWord(Rng& rng, int target_letters) {
  std::string text;
  while (static_cast<int>(text.size()) < target_letters) {
    for (const char gen : {'a', 'b'}) {
      const int magnitude = 1 + static_cast<int>(rng.Below(4));
      const bool negative = rng.Below(2) == 0;
      const char letter = negative ? (gen == 'a' ? 'A' : 'B') : gen;
      text.append(static_cast<size_t>(magnitude), letter);
    }
  }
  return text;
}

double MillisecondsSince(
    const std::chrono::steady_clock::time_point& start) {
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(elapsed).count();
}

int RunArea(const std::vector<std::string>& words,
            const std::string& presentation, bool want_witness, bool json_out,
            bool oracle_check) {
  const wa_presentation mode = presentation == "powers"
                                   ? WA_PRESENTATION_POWERS
                                   : WA_PRESENTATION_TRIVIAL;
  OwnedOracle oracle;
  if (oracle_check) {
    if (const auto status = wa_oracle_create(0, 0, &oracle.ptr);
        status != WA_OK) {
      return ReportError(status);
    }
  }

  bool any_mismatch = false;
  bool first = true;
  for (const auto& text : words) {
    OwnedWord word;
    if (const auto status = wa_word_parse(text.c_str(), &word.ptr);
        status != WA_OK) {
      return ReportError(status);
    }
    OwnedString input_text;
    if (const auto status =
            wa_word_format(word.ptr, WA_FORMAT_COMPRESSED, &input_text.ptr);
        status != WA_OK) {
      return ReportError(status);
    }

    const auto start = std::chrono::steady_clock::now();
    OwnedResult result;
    if (const auto status = wa_area(word.ptr, mode, &result.ptr);
        status != WA_OK) {
      return ReportError(status);
    }
    const double elapsed_ms = MillisecondsSince(start);

    const auto verify_status = wa_result_verify(result.ptr);
    std::string verify_reason;
    if (verify_status != WA_OK) {
      any_mismatch = true;
      verify_reason = wa_last_error();
    }

    // -1 unknown, 0 disagrees, 1 agrees, -2 word over the oracle bound.
    int oracle_agrees = -1;
    int64_t oracle_area = -1;
    if (oracle_check) {
      const auto status =
          wa_oracle_area(oracle.ptr, word.ptr, mode, &oracle_area);
      if (status == WA_ERR_LIMIT) {
        oracle_agrees = -2;
      } else if (status != WA_OK) {
        return ReportError(status);
      } else {
        oracle_agrees = oracle_area == wa_result_area(result.ptr) ? 1 : 0;
        if (oracle_agrees == 0) any_mismatch = true;
      }
    }

    json witness = json::parse(wa_result_witness_json(result.ptr));
    const json canonical = json::parse(wa_result_canonical_json(result.ptr));
    if (json_out) {
      json line = witness;
      if (!want_witness) {
        line.erase("matching");
        line.erase("partition");
      }
      line["input"] = input_text.ptr;
      line["canonical"] = canonical;
      line["time_ms"] = elapsed_ms;
      if (verify_status != WA_OK) line["verify_error"] = verify_reason;
      if (oracle_check) {
        if (oracle_agrees == -2) {
          line["oracle_agrees"] = nullptr;
        } else {
          line["oracle_agrees"] = oracle_agrees == 1;
        }
      }
      std::cout << line.dump() << "\n";
    } else {
      if (!first) std::cout << "\n";
      std::cout << "input: " << input_text.ptr << "\n";
      std::cout << "presentation: " << presentation << "\n";
      std::cout << "length: " << wa_word_length(word.ptr) << "\n";
      std::cout << "canonical: " << canonical["word"].get<std::string>()
                << "\n";
      std::cout << "area: " << wa_result_area(result.ptr) << "\n";
      if (want_witness) {
        const char* key = mode == WA_PRESENTATION_TRIVIAL ? "matching"
                                                          : "partition";
        std::cout << "word: " << witness["word"].get<std::string>() << "\n";
        std::cout << "witness: " << witness[key].dump() << "\n";
        std::cout << "witness_ok: "
                  << (verify_status == WA_OK ? "true" : "false") << "\n";
      }
      if (oracle_check) {
        if (oracle_agrees == -2) {
          std::cout << "oracle: skipped\n";
        } else {
          std::cout << "oracle: " << oracle_area << "\n";
          std::cout << "oracle_agrees: "
                    << (oracle_agrees == 1 ? "true" : "false") << "\n";
        }
      }
    }
    if (verify_status != WA_OK && !json_out) {
      std::cerr << "error: witness verification failed: " << verify_reason
                << "\n";
    }
    first = false;
  }
  return any_mismatch ? 2 : 0;
}

int RunSubsetSum(const std::vector<long long>& entries, bool theorem2,
                 bool json_out) {
  std::vector<int64_t> values(entries.begin(), entries.end());
  int32_t exists = 0;
  std::vector<size_t> witness(values.size());
  size_t witness_len = 0;
  if (const auto status =
          wa_zero_subset(values.data(), values.size(), &exists,
                         witness.data(), &witness_len);
      status != WA_OK) {
    return ReportError(status);
  }
  witness.resize(exists != 0 ? witness_len : 0);

  wa_criterion_report report{};
  if (theorem2) {
    if (const auto status =
            wa_criterion_check(values.data(), values.size(), &report);
        status != WA_OK) {
      return ReportError(status);
    }
  }

  if (json_out) {
    json line;
    line["entries"] = entries;
    line["count"] = entries.size();
    line["exists"] = exists != 0;
    if (exists != 0) line["witness"] = witness;
    if (theorem2) {
      line["area"] = report.area;
      line["area_within_count"] = report.area_within_count != 0;
      line["equivalence_holds"] = report.equivalence_holds != 0;
      line["upper_bound_holds"] = report.upper_bound_holds != 0;
    }
    std::cout << line.dump() << "\n";
  } else {
    std::cout << "entries:";
    for (const auto entry : entries) std::cout << " " << entry;
    std::cout << "\n";
    std::cout << "count: " << entries.size() << "\n";
    std::cout << "exists: " << (exists != 0 ? "true" : "false") << "\n";
    if (exists != 0) {
      std::cout << "witness:";
      for (const auto index : witness) std::cout << " " << index;
      std::cout << "\n";
    }
    if (theorem2) {
      std::cout << "area: " << report.area << "\n";
      std::cout << "area_within_count: "
                << (report.area_within_count != 0 ? "true" : "false") << "\n";
      std::cout << "equivalence_holds: "
                << (report.equivalence_holds != 0 ? "true" : "false") << "\n";
      std::cout << "upper_bound_holds: "
                << (report.upper_bound_holds != 0 ? "true" : "false") << "\n";
    }
  }
  return 0;
}

struct SelftestPhase {
  long long words = 0;
  long long mismatches = 0;
  long long witness_failures = 0;
};

// Compares the library against the reference oracle on one word and records
// the outcome; prints the first few counterexamples.
void SelftestWord(const std::string& text, wa_presentation mode,
                  wa_oracle* oracle, SelftestPhase& phase) {
  constexpr int kMaxReported = 10;
  OwnedWord word;
  if (wa_word_parse(text.c_str(), &word.ptr) != WA_OK) return;
  OwnedResult result;
  if (wa_area(word.ptr, mode, &result.ptr) != WA_OK) {
    ++phase.words;
    ++phase.mismatches;
    if (phase.mismatches <= kMaxReported) {
      std::cout << "mismatch: word=" << text << " error=" << wa_last_error()
                << "\n";
    }
    return;
  }
  ++phase.words;
  int64_t expected = -1;
  if (wa_oracle_area(oracle, word.ptr, mode, &expected) == WA_OK &&
      expected != wa_result_area(result.ptr)) {
    ++phase.mismatches;
    if (phase.mismatches <= kMaxReported) {
      std::cout << "mismatch: word=" << text
                << " got=" << wa_result_area(result.ptr)
                << " oracle=" << expected << "\n";
    }
  }
  if (wa_result_verify(result.ptr) != WA_OK) {
    ++phase.witness_failures;
    if (phase.witness_failures <= kMaxReported) {
      std::cout << "witness failure: word=" << text
                << " reason=" << wa_last_error() << "\n";
    }
  }
}

int RunSelftest(const std::string& presentation, int max_len,
                long long samples, uint64_t seed) {
  std::cout << "seed: " << seed << "\n";
  std::cout << "max-len: " << max_len << "\n";
  std::cout << "samples: " << samples << "\n";

  std::vector<std::pair<std::string, wa_presentation>> modes;
  if (presentation == "trivial" || presentation == "both") {
    modes.emplace_back("trivial", WA_PRESENTATION_TRIVIAL);
  }
  if (presentation == "powers" || presentation == "both") {
    modes.emplace_back("powers", WA_PRESENTATION_POWERS);
  }

  bool failed = false;
  for (const auto& [name, mode] : modes) {
    std::cout << "presentation: " << name << "\n";
    OwnedOracle oracle;
    if (const auto status = wa_oracle_create(max_len, 0, &oracle.ptr);
        status != WA_OK) {
      return ReportError(status);
    }

    // Every word over {a, A, b, B} up to length 8.
    SelftestPhase exhaustive;
    const int exhaustive_max = std::min(max_len, 8);
    static constexpr char kAlphabet[] = {'a', 'A', 'b', 'B'};
    for (int length = 1; length <= exhaustive_max; ++length) {
      std::string text(static_cast<size_t>(length), 'a');
      uint64_t total = 1;
      for (int i = 0; i < length; ++i) total *= 4;
      for (uint64_t code = 0; code < total; ++code) {
        uint64_t rest = code;
        for (int i = 0; i < length; ++i) {
          text[static_cast<size_t>(i)] = kAlphabet[rest & 3];
          rest >>= 2;
        }
        SelftestWord(text, mode, oracle.ptr, exhaustive);
      }
    }
    std::cout << "exhaustive words: " << exhaustive.words << "\n";
    std::cout << "exhaustive mismatches: " << exhaustive.mismatches << "\n";

    SelftestPhase randomized;
    Rng rng(seed);
    for (long long i = 0; i < samples; ++i) {
      const int length = 1 + static_cast<int>(rng.Below(
                                 static_cast<uint64_t>(max_len)));
      const std::string text = mode == WA_PRESENTATION_POWERS
                                   ? RandomRunWord(rng, length)
                                   : RandomLetterWord(rng, length);
      SelftestWord(text, mode, oracle.ptr, randomized);
    }
    std::cout << "randomized words: " << randomized.words << "\n";
    std::cout << "randomized mismatches: " << randomized.mismatches << "\n";
    std::cout << "witness failures: "
              << exhaustive.witness_failures + randomized.witness_failures
              << "\n";
    failed = failed || exhaustive.mismatches != 0 ||
             randomized.mismatches != 0 || exhaustive.witness_failures != 0 ||
             randomized.witness_failures != 0;
  }
  std::cout << "selftest: " << (failed ? "FAIL" : "PASS") << "\n";
  return failed ? 2 : 0;
}

int RunBench(const std::string& presentation, long long max_n,
             uint64_t seed) {
  const wa_presentation mode = presentation == "powers"
                                   ? WA_PRESENTATION_POWERS
                                   : WA_PRESENTATION_TRIVIAL;
  const long long top =
      max_n > 0 ? max_n : (mode == WA_PRESENTATION_TRIVIAL ? 1024 : 600);
  std::cout << "presentation: " << presentation << "\n";
  std::cout << "seed: " << seed << "\n";

  std::vector<double> log_sizes;
  std::vector<double> log_times;
  for (const long long size : {top / 8, top / 4, top / 2, top}) {
    if (size < 1) continue;
    Rng rng(seed ^ static_cast<uint64_t>(size));
    const std::string text =
        mode == WA_PRESENTATION_TRIVIAL
            ? RandomLetterWord(rng, static_cast<int>(size))
            : RandomSyllableWord(rng, static_cast<int>(size));
    OwnedWord word;
    if (const auto status = wa_word_parse(text.c_str(), &word.ptr);
        status != WA_OK) {
      return ReportError(status);
    }
    const int64_t letters = wa_word_length(word.ptr);

    double best_ms = 0;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      OwnedResult result;
      if (const auto status = wa_area(word.ptr, mode, &result.ptr);
          status != WA_OK) {
        return ReportError(status);
      }
      const double elapsed = MillisecondsSince(start);
      if (rep == 0 || elapsed < best_ms) best_ms = elapsed;
    }
    std::printf("n: %lld time_ms: %.3f\n", static_cast<long long>(letters),
                best_ms);
    log_sizes.push_back(std::log2(static_cast<double>(letters)));
    log_times.push_back(std::log2(std::max(best_ms, 1e-6)));
  }

  if (top < 64 || log_sizes.size() < 2) {
    std::cout << "slope: insufficient range\n";
    return 0;
  }
  const size_t count = log_sizes.size();
  double mean_x = 0;
  double mean_y = 0;
  for (size_t i = 0; i < count; ++i) {
    mean_x += log_sizes[i];
    mean_y += log_times[i];
  }
  mean_x /= static_cast<double>(count);
  mean_y /= static_cast<double>(count);
  double numerator = 0;
  double denominator = 0;
  for (size_t i = 0; i < count; ++i) {
    numerator += (log_sizes[i] - mean_x) * (log_times[i] - mean_y);
    denominator += (log_sizes[i] - mean_x) * (log_sizes[i] - mean_x);
  }
  std::printf("slope: %.2f\n", numerator / denominator);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact areas of trivial words in small group presentations"};
  app.set_version_flag("--version", wa_version());
  app.require_subcommand(1);

  auto* area_cmd =
      app.add_subcommand("area", "compute the area of one or more words");
  std::vector<std::string> words;
  area_cmd->add_option("words", words, "words over a, b, A, B (a^-3 works)")
      ->required();
  std::string area_presentation = "trivial";
  area_cmd
      ->add_option("--presentation", area_presentation,
                   "relator family: trivial (a, b) or powers (a^k, b^k)")
      ->check(CLI::IsMember({"trivial", "powers"}));
  bool want_witness = false;
  area_cmd->add_flag("--witness", want_witness,
                     "print the optimal witness and verify it");
  bool area_json = false;
  area_cmd->add_flag("--json", area_json, "one JSON object per word");
  bool oracle_check = false;
  area_cmd->add_flag("--oracle-check", oracle_check,
                     "cross-check against the reference solver (length <= 14)");

  auto* subset_cmd = app.add_subcommand(
      "subset-sum", "find a nonempty zero-sum subsequence of integers");
  std::vector<long long> entries;
  subset_cmd->add_option("entries", entries, "nonzero integers")->required();
  bool theorem2 = false;
  subset_cmd->add_flag(
      "--theorem2", theorem2,
      "also report the area of a b^{i_1} ... a b^{i_k} and the "
      "area/zero-sum equivalence");
  bool subset_json = false;
  subset_cmd->add_flag("--json", subset_json, "emit one JSON object");

  auto* selftest_cmd = app.add_subcommand(
      "selftest", "compare the library against the reference solver");
  std::string selftest_presentation = "both";
  selftest_cmd
      ->add_option("--presentation", selftest_presentation,
                   "trivial, powers, or both")
      ->check(CLI::IsMember({"trivial", "powers", "both"}));
  int max_len = 8;
  selftest_cmd->add_option("--max-len", max_len, "longest word to test")
      ->check(CLI::Range(1, 14));
  long long samples = 1000;
  selftest_cmd->add_option("--samples", samples, "randomized words per phase")
      ->check(CLI::Range(0LL, 10000000LL));
  uint64_t selftest_seed = 1;
  selftest_cmd->add_option("--seed", selftest_seed, "random seed");

  auto* bench_cmd =
      app.add_subcommand("bench", "time the solver on growing random words");
  std::string bench_presentation = "trivial";
  bench_cmd
      ->add_option("--presentation", bench_presentation,
                   "trivial or powers")
      ->check(CLI::IsMember({"trivial", "powers"}));
  long long max_n = 0;
  bench_cmd
      ->add_option("--max-n", max_n,
                   "largest word length (default 1024 trivial, 600 powers)")
      ->check(CLI::Range(0LL, 8192LL));
  uint64_t bench_seed = 1;
  bench_cmd->add_option("--seed", bench_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*area_cmd) {
    return RunArea(words, area_presentation, want_witness, area_json,
                   oracle_check);
  }
  if (*subset_cmd) {
    return RunSubsetSum(entries, theorem2, subset_json);
  }
  if (*selftest_cmd) {
    return RunSelftest(selftest_presentation, max_len, samples,
                       selftest_seed);
  }
  return RunBench(bench_presentation, max_n, bench_seed);
}
