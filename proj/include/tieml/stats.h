// Copyright 2026 The TIE-ML Tools Authors.
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

#ifndef TIEML_STATS_H_
#define TIEML_STATS_H_

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "tieml/model.h"

namespace tieml {

struct CorpusStats {
  std::uint64_t documents = 0;
  std::uint64_t sentences = 0;
  std::uint64_t clauses = 0;
  // Clauses carrying an eventid.
  std::uint64_t events = 0;
  // Keyed by TenseLabel::key(); sums to the number of clauses with a tense.
  std::map<std::string, std::uint64_t> tenses;
  // Keyed by traditional label; sums to the number of complete triples.
  std::map<std::string, std::uint64_t> categories;
  std::uint64_t inverted_documents = 0;
  std::uint64_t inversions = 0;

  void Add(const Corpus &corpus);

  double InvertedFraction() const;
  double MeanInversions() const;

  nlohmann::ordered_json ToJsonValue() const;
  std::string ToTable() const;
};

}  // namespace tieml

#endif  // TIEML_STATS_H_
