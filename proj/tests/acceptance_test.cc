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

// Acceptance harness: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli.h"
#include "test_support.h"
#include "tieml/conll.h"
#include "tieml/json_format.h"
#include "tieml/reichenbach.h"
#include "tieml/timeline.h"
#include "tieml/timeml.h"
#include "tieml/validator.h"

namespace tieml {
namespace {

// Collects the first failure of a criterion.
class Check {
 public:
  void That(bool condition, const std::string &what) {
    if (!condition && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string &failure() const { return failure_; }

 private:
  std::string failure_;
};

int ValidateCommand(const std::vector<std::string> &paths, std::string *output = nullptr) {
  std::vector<std::string> args = {"validate"};
  args.insert(args.end(), paths.begin(), paths.end());
  std::istringstream in;
  std::ostringstream out, err;
  int status = cli::Run(args, in, out, err);
  if (output) *output = out.str() + err.str();
  return status;
}

void FixtureFidelity(Check &check) {
  for (const std::string &name : testing::AnnotatedFixtures()) {
    check.That(std::filesystem::is_regular_file(testing::FixturePath(name)), name + " is missing");
    if (!check.ok()) return;
    Corpus corpus = testing::ParseFixture(name);
    check.That(!HasErrors(Validate(corpus)), name + " has Error diagnostics");
    check.That(Parse(Serialize(corpus)).corpus == corpus, name + " does not round trip");
  }
}

void ReichenbachOracle(Check &check) {
  std::set<std::pair<int, int>> reached;
  for (int e = -2; e <= 2; ++e) {
    for (int r = -2; r <= 2; ++r) {
      for (int s = -2; s <= 2; ++s) {
        ReichenbachTriple triple(e, r, s);
        TenseCategory c = ClassifyTense(triple);
        std::pair<int, int> got{static_cast<int>(c.reference) - 1, static_cast<int>(c.event) - 1};
        std::pair<int, int> want{(r > s) - (r < s), (e > r) - (e < r)};
        check.That(got == want, "classification disagrees with the oracle");
        reached.insert(got);
        ReichenbachTriple once = NormalizeTriple(triple);
        check.That(NormalizeTriple(once) == once, "normalization is not idempotent");
      }
    }
  }
  check.That(reached.size() == 9, "not every category occurs");
  for (const TenseCategory &c : kAllTenseCategories) {
    check.That(ClassifyTense(CanonicalTriple(c)) == c, "canonical triple does not classify back");
  }
}

void IncoherenceDetection(Check &check) {
  std::vector<Diagnostic> found = Validate(testing::ParseFixture("incoherent_future.tieml"));
  std::size_t mismatches = 0;
  for (const Diagnostic &d : found) {
    if (d.code == DiagnosticCode::kTenseTripleMismatch) {
      ++mismatches;
      check.That(d.severity == Severity::kError, "mismatch is not an Error");
    }
  }
  check.That(mismatches == 1, "expected exactly one TENSE_TRIPLE_MISMATCH");
  check.That(ValidateCommand({testing::FixturePath("incoherent_future.tieml")}) == cli::kExitContent,
             "validate did not exit 1");
  for (const char *name : {"simple_past.tieml", "pluperfect.tieml", "german_future.tieml"}) {
    for (const Diagnostic &d : Validate(testing::ParseFixture(name))) {
      check.That(d.code != DiagnosticCode::kTenseTripleMismatch, std::string(name) + " reports a mismatch");
    }
  }
}

void TimelineCorrectness(Check &check) {
  Timeline six = BuildTimeline(testing::ParseFixture("recipe_inversion.tieml").documents.at(0));
  std::vector<EventId> order;
  for (const SlotGroup &g : six.slots) order.insert(order.end(), g.events.begin(), g.events.end());
  check.That(order == std::vector{EventId(2), EventId(1)}, "wrong temporal order for the recipe fixture");
  check.That(InversionCount(six) == 1, "recipe fixture inversion count");
  check.That(!IsMonotone(six), "recipe fixture reported monotone");

  Timeline shared = BuildTimeline(testing::ParseFixture("shared_slot.tieml").documents.at(0));
  check.That(shared.slots.size() == 1 && shared.slots[0].events == std::set{EventId(1), EventId(2)},
             "shared-slot fixture grouping");
  check.That(InversionCount(shared) == 0, "shared-slot fixture inversion count");

  testing::CorpusGenerator generator(4);
  for (int round = 0; round < 200 && check.ok(); ++round) {
    std::size_t n = generator.Uniform(0, 50);
    std::vector<Clause> clauses;
    std::vector<std::uint32_t> slots;
    for (std::size_t i = 0; i < n; ++i) {
      Clause c;
      c.event_id = EventId(static_cast<std::int64_t>(i + 1));
      if (generator.Chance(0.9)) {
        c.time_slot = TimeSlot(static_cast<std::int64_t>(generator.Uniform(1, 12)));
        slots.push_back(c.time_slot->value());
      }
      clauses.push_back(c);
    }
    Document document;
    if (n > 0) document.sentences.emplace_back(std::move(clauses));
    check.That(InversionCount(BuildTimeline(document)) == testing::BruteForceInversions(slots),
               "inversion count differs from brute force");
  }
}

void LosslessRoundTrips(Check &check) {
  testing::CorpusGenerator generator(5, {.max_documents = 20, .max_sentences = 10, .control_whitespace = false});
  for (int round = 0; round < 500 && check.ok(); ++round) {
    Corpus corpus = generator.Next();
    check.That(FromJson(ToJson(corpus)) == corpus, "JSON round trip differs");
    check.That(FromConll(ToConll(corpus)) == corpus, "CoNLL round trip differs");
  }
}

std::vector<std::optional<std::uint32_t>> SlotsInOrder(const Document &document) {
  std::vector<std::optional<std::uint32_t>> out;
  for (const Clause *c : document.Clauses()) {
    if (!c->event_id) continue;
    out.push_back(c->time_slot ? std::optional(c->time_slot->value()) : std::nullopt);
  }
  return out;
}

void TimemlOrderPreservation(Check &check) {
  testing::CorpusGenerator generator(6);
  for (int round = 0; round < 200 && check.ok(); ++round) {
    std::size_t n = generator.Uniform(1, 10);
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < n; ++i) {
      Clause c;
      c.event_id = EventId(static_cast<std::int64_t>(i + 1));
      c.time_slot = TimeSlot(static_cast<std::int64_t>(generator.Uniform(1, 6)));
      c.text = "event";
      clauses.push_back(c);
    }
    Corpus corpus{{Document{"", {Sentence(std::move(clauses))}}}};
    // Build the timeline first: it is the reference ordering.
    Timeline reference = BuildTimeline(corpus.documents[0]);
    std::vector<std::optional<std::uint32_t>> expected(n);
    for (const SlotGroup &g : reference.slots) {
      for (const EventId &id : g.events) expected[id.value() - 1] = g.slot.value();
    }
    std::vector<TimeMLDoc> exported = ToTimeML(corpus);
    TimeMLImport imported = FromTimeML(exported);
    check.That(imported.corpus.documents.size() == 1, "document count changed");
    if (!check.ok()) return;
    check.That(testing::PairwiseRelations(SlotsInOrder(imported.corpus.documents[0])) ==
                   testing::PairwiseRelations(expected),
               "pairwise relations changed");
  }

  // Inclusion-type relations always surface in the loss report.
  const char *kCollapsing[] = {"INCLUDES", "IS_INCLUDED", "DURING", "DURING_INV",
                               "BEGINS", "BEGUN_BY", "ENDS", "ENDED_BY"};
  for (int round = 0; round < 200 && check.ok(); ++round) {
    TimeMLDoc doc;
    std::size_t n = generator.Uniform(2, 10);
    for (std::size_t i = 0; i < n; ++i) doc.events.push_back({"e" + std::to_string(i + 1), "x", {}, {}});
    std::size_t collapsing = 0;
    std::size_t links = generator.Uniform(0, 8);
    for (std::size_t k = 0; k < links; ++k) {
      std::size_t a = generator.Uniform(1, n);
      std::size_t b = generator.Uniform(1, n);
      if (a == b) continue;
      doc.tlinks.push_back({"e" + std::to_string(a), "e" + std::to_string(b), kCollapsing[generator.Uniform(0, 7)]});
      ++collapsing;
    }
    TimeMLImport imported = FromTimeML(std::span(&doc, 1));
    check.That(imported.loss.Count("collapsed-inclusion") + imported.loss.Count("collapsed-boundary") == collapsing,
               "an inclusion-type link is missing from the loss report");
  }
}

void ScaleSanity(Check &check) {
  std::string path = (std::filesystem::temp_directory_path() / "tieml_acceptance_scale.tieml").string();
  {
    testing::CorpusGenerator generator(7);
    Corpus corpus;
    for (int d = 0; d < 100; ++d) {
      Document document;
      document.id = "doc" + std::to_string(d);
      for (int s = 0; s < 100; ++s) {
        std::vector<Clause> clauses;
        std::size_t count = generator.Uniform(1, 4);
        for (std::size_t c = 0; c < count; ++c) clauses.push_back(generator.RandomClause());
        document.sentences.emplace_back(std::move(clauses));
      }
      corpus.documents.push_back(std::move(document));
    }
    std::ofstream(path, std::ios::binary) << Serialize(corpus);
  }
  std::string first, second;
  auto start = std::chrono::steady_clock::now();
  int status = ValidateCommand({path}, &first);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ValidateCommand({path}, &second);
  check.That(status == cli::kExitOk || status == cli::kExitContent, "validate failed to run");
  check.That(seconds < 5.0, "validate took " + std::to_string(seconds) + " s");
  check.That(!first.empty() && first == second, "diagnostics differ between runs");
  std::filesystem::remove(path);
}

struct Criterion {
  int number;
  const char *name;
  double limit_seconds;
  std::function<void(Check &)> run;
};

}  // namespace
}  // namespace tieml

int main() {
  using namespace tieml;
  const Criterion kCriteria[] = {
      {1, "fixture fidelity", 1.0, FixtureFidelity},
      {2, "reichenbach oracle", 1.0, ReichenbachOracle},
      {3, "incoherence detection", 0.0, IncoherenceDetection},
      {4, "timeline correctness", 5.0, TimelineCorrectness},
      {5, "lossless round trips", 10.0, LosslessRoundTrips},
      {6, "timeml order preservation", 10.0, TimemlOrderPreservation},
      {7, "scale sanity", 0.0, ScaleSanity},
  };
  int failures = 0;
  for (const Criterion &criterion : kCriteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception &e) {
      check.That(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
      check.That(false, "exceeded " + std::to_string(criterion.limit_seconds) + " s");
    }
    std::printf("criterion %d (%s): %s [%.3f s]%s%s\n", criterion.number, criterion.name,
                check.ok() ? "PASS" : "FAIL", seconds, check.ok() ? "" : " ", check.failure().c_str());
    if (!check.ok()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
