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

#ifndef WORDAREA_WORD_H_
#define WORDAREA_WORD_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Words over the free group F(a, b), stored as explicit letter sequences.
// The text grammar accepts compressed spellings ("aabAAB", capitals are
// inverses) and caret spellings ("a^2 b a^-2 b^-1"); both formats round-trip.

namespace wordarea {

enum class Generator : uint8_t { kA = 0, kB = 1 };

inline char GeneratorChar(Generator g) { return g == Generator::kA ? 'a' : 'b'; }

struct Letter {
  Generator gen;
  int8_t sign;  // +1 or -1

  Letter Inverse() const { return Letter{gen, static_cast<int8_t>(-sign)}; }
  char ToChar() const;
  bool operator==(const Letter&) const = default;
};

struct Word {
  std::vector<Letter> letters;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

// Raised on malformed word text; `position` is the 1-based offset of the
// offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

enum class FormatStyle { kCompressed, kCaret };

// Grammar: word := token*, token := [abAB] | [ab] '^' ['-']? digit+ with a
// nonzero value. Whitespace between tokens is ignored.
Word ParseWord(std::string_view text);

std::string FormatWord(const Word& w, FormatStyle style);

Word FreeReduce(const Word& w);

Word Invert(const Word& w);

Word Concat(const Word& u, const Word& v);

// w = xy -> yx where x has `offset` letters; offset may equal w.size().
Word Rotate(const Word& w, size_t offset);

// Exchanges the two generators, keeping signs.
Word SwapGenerators(const Word& w);

struct Syllable {
  Generator gen;
  long long exponent;  // never zero

  bool operator==(const Syllable&) const = default;
};

// Maximal runs of a single generator. Requires w freely reduced (throws
// std::invalid_argument otherwise); runs of a reduced word have uniform sign.
std::vector<Syllable> Syllables(const Word& w);

Word WordFromSyllables(std::span<const Syllable> syllables);

// Alternating syllable word a^{i_1} b^{i'_1} ... a^{i_m} b^{i'_m} with all
// exponents nonzero; the input shape of the power-relator area tables.
struct SyllableWord {
  std::vector<Syllable> syllables;  // size 2m, a-first, strictly alternating

  size_t pair_count() const { return syllables.size() / 2; }
};

// Validates the alternating a-first shape; throws std::invalid_argument.
SyllableWord MakeSyllableWord(std::vector<Syllable> syllables);

// Result of reducing a word to a cyclically reduced representative and
// rotating it into a normal position. Area is blind to both steps, so the
// power-relator pipeline always starts from one of these.
struct CanonicalForm {
  enum class Kind { kEmpty, kPower, kAlternating };

  Kind kind = Kind::kEmpty;
  Word word;                        // canonical letter sequence
  std::vector<Syllable> syllables;  // kPower: one entry; kAlternating: 2m
  Word conjugator;                  // input ~ conjugator . word . conjugator^-1
  size_t cancelled_pairs = 0;       // inverse pairs removed before rotating
  size_t rotation = 0;              // letter offset into the reduced core
  std::vector<size_t> source_positions;  // canonical pos -> 1-based input pos
};

// Freely reduces, cyclically reduces, merges the wrap-around run, and rotates
// so an a-run leads. Among a-runs the one whose first letter has the smallest
// source position wins, which pins down one form per input.
CanonicalForm CyclicCanonicalize(const Word& w);

}  // namespace wordarea

#endif  // WORDAREA_WORD_H_
