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

#include "word.h"

#include <cctype>
#include <algorithm>
#include <utility>

namespace wordarea {

namespace {

// Caps keep hostile inputs from exhausting memory; far above working sizes.
constexpr long long kMaxExponent = 1000000;
constexpr long long kMaxLetters = 8000000;

Letter LetterFromChar(char c, size_t position) {
  switch (c) {
    case 'a': return Letter{Generator::kA, +1};
    case 'A': return Letter{Generator::kA, -1};
    case 'b': return Letter{Generator::kB, +1};
    case 'B': return Letter{Generator::kB, -1};
    default:
      throw ParseError(
          "parse error at position " + std::to_string(position) +
              ": unexpected character '" + std::string(1, c) + "'",
          position);
  }
}

void AppendRun(Word* w, Generator gen, long long exponent, size_t position) {
  if (static_cast<long long>(w->size()) + (exponent < 0 ? -exponent : exponent) >
      kMaxLetters) {
    throw ParseError("parse error at position " + std::to_string(position) +
                         ": word too long",
                     position);
  }
  Letter letter{gen, static_cast<int8_t>(exponent < 0 ? -1 : +1)};
  for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    w->letters.push_back(letter);
  }
}

}  // namespace

char Letter::ToChar() const {
  char c = GeneratorChar(gen);
  return sign > 0 ? c : static_cast<char>(std::toupper(c));
}

Word ParseWord(std::string_view text) {
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t token_pos = i + 1;  // 1-based
    Letter letter = LetterFromChar(c, token_pos);
    ++i;
    if (i < text.size() && text[i] == '^') {
      if (letter.sign < 0) {
        throw ParseError("parse error at position " + std::to_string(i + 1) +
                             ": '^' may only follow a lowercase generator",
                         i + 1);
      }
      ++i;  // consume '^'
      long long sign = 1;
      if (i < text.size() && text[i] == '-') {
        sign = -1;
        ++i;
      }
      size_t digits_pos = i + 1;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("parse error at position " + std::to_string(digits_pos) +
                             ": expected digits after '^'",
                         digits_pos);
      }
      long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxExponent) {
          throw ParseError(
              "parse error at position " + std::to_string(digits_pos) +
                  ": exponent exceeds " + std::to_string(kMaxExponent),
              digits_pos);
        }
        ++i;
      }
      if (value == 0) {
        throw ParseError("parse error at position " + std::to_string(digits_pos) +
                             ": zero exponent is not a token",
                         digits_pos);
      }
      AppendRun(&w, letter.gen, sign * value, token_pos);
    } else {
      w.letters.push_back(letter);
    }
  }
  return w;
}

std::string FormatWord(const Word& w, FormatStyle style) {
  std::string out;
  if (style == FormatStyle::kCompressed) {
    out.reserve(w.size());
    for (const Letter& l : w.letters) out.push_back(l.ToChar());
    return out;
  }
  // Caret style: one token per maximal equal-letter run.
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    long long exponent = static_cast<long long>(j - i) * w.letters[i].sign;
    if (!out.empty()) out.push_back(' ');
    out.push_back(GeneratorChar(w.letters[i].gen));
    if (exponent != 1) {
      out.push_back('^');
      out += std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

Word FreeReduce(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.letters.back() == l.Inverse()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word Invert(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->Inverse());
  }
  return out;
}

Word Concat(const Word& u, const Word& v) {
  Word out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

Word Rotate(const Word& w, size_t offset) {
  if (offset > w.size()) throw std::invalid_argument("rotation offset out of range");
  Word out;
  out.letters.reserve(w.size());
  out.letters.insert(out.letters.end(), w.letters.begin() + offset, w.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + offset);
  return out;
}

Word SwapGenerators(const Word& w) {
  Word out = w;
  for (Letter& l : out.letters) {
    l.gen = l.gen == Generator::kA ? Generator::kB : Generator::kA;
  }
  return out;
}

std::vector<Syllable> Syllables(const Word& w) {
  std::vector<Syllable> out;
  size_t i = 0;
  while (i < w.size()) {
    if (i > 0 && w.letters[i] == w.letters[i - 1].Inverse()) {
      throw std::invalid_argument("syllables: word is not freely reduced");
    }
    size_t j = i;
    while (j < w.size() && w.letters[j].gen == w.letters[i].gen) {
      if (w.letters[j].sign != w.letters[i].sign) {
        throw std::invalid_argument("syllables: word is not freely reduced");
      }
      ++j;
    }
    out.push_back(Syllable{w.letters[i].gen,
                           static_cast<long long>(j - i) * w.letters[i].sign});
    i = j;
  }
  return out;
}

Word WordFromSyllables(std::span<const Syllable> syllables) {
  long long total = 0;
  for (const Syllable& s : syllables) {
    if (s.exponent == 0) throw std::invalid_argument("zero syllable exponent");
    total += s.exponent < 0 ? -s.exponent : s.exponent;
    if (total > kMaxLetters) throw std::length_error("syllable word too long");
  }
  Word w;
  w.letters.reserve(static_cast<size_t>(total));
  for (const Syllable& s : syllables) {
    Letter letter{s.gen, static_cast<int8_t>(s.exponent < 0 ? -1 : +1)};
    for (long long i = 0; i < (s.exponent < 0 ? -s.exponent : s.exponent); ++i) {
      w.letters.push_back(letter);
    }
  }
  return w;
}

SyllableWord MakeSyllableWord(std::vector<Syllable> syllables) {
  if (syllables.empty() || syllables.size() % 2 != 0) {
    throw std::invalid_argument("syllable word must have an even, positive count");
  }
  for (size_t i = 0; i < syllables.size(); ++i) {
    Generator expect = i % 2 == 0 ? Generator::kA : Generator::kB;
    if (syllables[i].gen != expect) {
      throw std::invalid_argument("syllable word must alternate a,b,...,a,b");
    }
    if (syllables[i].exponent == 0) {
      throw std::invalid_argument("zero syllable exponent");
    }
  }
  return SyllableWord{std::move(syllables)};
}

CanonicalForm CyclicCanonicalize(const Word& w) {
  // Free reduction with per-letter source positions.
  std::vector<Letter> reduced;
  std::vector<size_t> src;
  reduced.reserve(w.size());
  src.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.letters[i];
    if (!reduced.empty() && reduced.back() == l.Inverse()) {
      reduced.pop_back();
      src.pop_back();
    } else {
      reduced.push_back(l);
      src.push_back(i + 1);
    }
  }
  CanonicalForm form;
  form.cancelled_pairs = (w.size() - reduced.size()) / 2;

  // Cyclic reduction: strip mutually inverse first/last letters. The stripped
  // prefix joins the conjugator.
  size_t lo = 0, hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo] == reduced[hi - 1].Inverse()) {
    form.conjugator.letters.push_back(reduced[lo]);
    ++lo;
    --hi;
    ++form.cancelled_pairs;
  }

  if (lo == hi) {
    form.kind = CanonicalForm::Kind::kEmpty;
    return form;
  }

  size_t core_len = hi - lo;
  auto core = [&](size_t t) -> const Letter& { return reduced[lo + t]; };
  bool uniform = true;
  for (size_t t = 1; t < core_len; ++t) {
    if (core(t).gen != core(0).gen) {
      uniform = false;
      break;
    }
  }

  if (uniform) {
    // A cyclically reduced run has one sign throughout.
    form.kind = CanonicalForm::Kind::kPower;
    form.word.letters.assign(reduced.begin() + lo, reduced.begin() + hi);
    form.source_positions.assign(src.begin() + lo, src.begin() + hi);
    form.syllables.push_back(Syllable{
        core(0).gen, static_cast<long long>(core_len) * core(0).sign});
    return form;
  }

  // Rotate so an a-run leads; the a-run whose first letter has the smallest
  // source position wins.
  size_t best = core_len;
  for (size_t t = 0; t < core_len; ++t) {
    if (core(t).gen != Generator::kA) continue;
    bool run_start = core((t + core_len - 1) % core_len).gen != Generator::kA;
    if (!run_start) continue;
    if (best == core_len || src[lo + t] < src[lo + best]) best = t;
  }

  form.kind = CanonicalForm::Kind::kAlternating;
  form.rotation = best;
  form.word.letters.reserve(core_len);
  form.source_positions.reserve(core_len);
  for (size_t t = 0; t < core_len; ++t) {
    size_t u = (best + t) % core_len;
    form.word.letters.push_back(core(u));
    form.source_positions.push_back(src[lo + u]);
  }
  for (size_t t = 0; t < best; ++t) {
    form.conjugator.letters.push_back(core(t));
  }
  form.syllables = Syllables(form.word);
  return form;
}

}  // namespace wordarea
