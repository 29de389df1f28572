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

#include "tieml/stats.h"

#include <cstdio>
#include <vector>

#include "tieml/reichenbach.h"
#include "tieml/timeline.h"

namespace tieml {

void CorpusStats::Add(const Corpus &corpus) {
  for (const Document &document : corpus.documents) {
    ++documents;
    sentences += document.sentences.size();
    // Inversions over the slot sequence in presentation order; this does
    // not need unique event ids, unlike BuildTimeline.
    std::vector<std::uint32_t> slots;
    for (const Clause *clause : document.Clauses()) {
      ++clauses;
      if (clause->event_id) {
        ++events;
        if (clause->time_slot) slots.push_back(clause->time_slot->value());
      }
      if (clause->tense) ++tenses[clause->tense->key()];
      if (std::optional<ReichenbachTriple> triple = clause->triple()) {
        ++categories[std::string(TraditionalLabel(ClassifyTense(*triple)))];
      }
    }
    std::uint64_t count = CountInversions(slots);
    inversions += count;
    if (count > 0) ++inverted_documents;
  }
}

double CorpusStats::InvertedFraction() const {
  return documents == 0 ? 0.0 : static_cast<double>(inverted_documents) / static_cast<double>(documents);
}

double CorpusStats::MeanInversions() const {
  return documents == 0 ? 0.0 : static_cast<double>(inversions) / static_cast<double>(documents);
}

nlohmann::ordered_json CorpusStats::ToJsonValue() const {
  nlohmann::ordered_json out;
  out["documents"] = documents;
  out["sentences"] = sentences;
  out["clauses"] = clauses;
  out["events"] = events;
  out["tenses"] = nlohmann::ordered_json::object();
  for (const auto &[label, count] : tenses) out["tenses"][label] = count;
  out["categories"] = nlohmann::ordered_json::object();
  for (const auto &[label, count] : categories) out["categories"][label] = count;
  out["inverted_fraction"] = InvertedFraction();
  out["mean_inversions"] = MeanInversions();
  return out;
}

std::string CorpusStats::ToTable() const {
  std::string out;
  auto row = [&out](const std::string &name, const std::string &value) {
    char line[128];
    std::snprintf(line, sizeof(line), "%-24s %s\n", name.c_str(), value.c_str());
    out += line;
  };
  auto fixed = [](double value) {
    char text[32];
    std::snprintf(text, sizeof(text), "%.4f", value);
    return std::string(text);
  };
  row("documents", std::to_string(documents));
  row("sentences", std::to_string(sentences));
  row("clauses", std::to_string(clauses));
  row("events", std::to_string(events));
  for (const auto &[label, count] : tenses) row("tense " + label, std::to_string(count));
  for (const auto &[label, count] : categories) row(label, std::to_string(count));
  row("inverted fraction", fixed(InvertedFraction()));
  row("mean inversions", fixed(MeanInversions()));
  return out;
}

}  // namespace tieml
