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

#include "witness_json.h"

#include <stdexcept>

#include "json.hpp"

namespace wordarea {

namespace {

using nlohmann::json;

json WitnessHeader(const Word& word, Presentation mode, long long area) {
  json out;
  out["word"] = FormatWord(word, FormatStyle::kCompressed);
  out["mode"] = mode == Presentation::kTrivial ? "trivial" : "powers";
  out["area"] = area;
  return out;
}

}  // namespace

std::string MatchingWitnessJson(const Word& word, long long area,
                                const Matching& matching) {
  json out = WitnessHeader(word, Presentation::kTrivial, area);
  json pairs = json::array();
  for (const auto& [p, q] : matching.pairs) {
    pairs.push_back(json::array({p, q}));
  }
  out["matching"] = std::move(pairs);
  return out.dump();
}

std::string PartitionWitnessJson(const Word& word, long long area,
                                 const NonCrossingPartition& partition) {
  json out = WitnessHeader(word, Presentation::kPowers, area);
  json blocks = json::array();
  for (const PartitionBlock& block : partition.blocks) {
    json b;
    b["letter"] = std::string(1, GeneratorChar(block.gen));
    b["positions"] = block.positions;
    blocks.push_back(std::move(b));
  }
  out["partition"] = std::move(blocks);
  return out.dump();
}

WitnessEnvelope ParseWitnessJson(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("witness json: ") + e.what());
  }
  try {
    WitnessEnvelope envelope;
    envelope.word = ParseWord(in.at("word").get<std::string>());
    const std::string mode = in.at("mode").get<std::string>();
    if (mode == "trivial") {
      envelope.mode = Presentation::kTrivial;
    } else if (mode == "powers") {
      envelope.mode = Presentation::kPowers;
    } else {
      throw std::invalid_argument("witness json: unknown mode " + mode);
    }
    envelope.area = in.at("area").get<long long>();
    if (in.contains("matching")) {
      Matching m;
      for (const json& pair : in.at("matching")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw std::invalid_argument("witness json: malformed pair");
        }
        m.pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
      envelope.matching = std::move(m);
    }
    if (in.contains("partition")) {
      NonCrossingPartition p;
      for (const json& b : in.at("partition")) {
        PartitionBlock block;
        const std::string letter = b.at("letter").get<std::string>();
        if (letter == "a") {
          block.gen = Generator::kA;
        } else if (letter == "b") {
          block.gen = Generator::kB;
        } else {
          throw std::invalid_argument("witness json: unknown letter " + letter);
        }
        block.positions = b.at("positions").get<std::vector<int>>();
        p.blocks.push_back(std::move(block));
      }
      envelope.partition = std::move(p);
    }
    return envelope;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("witness json: ") + e.what());
  }
}

std::string CanonicalFormJson(const CanonicalForm& form) {
  json out;
  switch (form.kind) {
    case CanonicalForm::Kind::kEmpty: out["kind"] = "empty"; break;
    case CanonicalForm::Kind::kPower: out["kind"] = "power"; break;
    case CanonicalForm::Kind::kAlternating: out["kind"] = "alternating"; break;
  }
  out["word"] = FormatWord(form.word, FormatStyle::kCompressed);
  out["conjugator"] = FormatWord(form.conjugator, FormatStyle::kCompressed);
  out["cancelled_pairs"] = form.cancelled_pairs;
  out["rotation"] = form.rotation;
  out["source_positions"] = form.source_positions;
  return out.dump();
}

}  // namespace wordarea
