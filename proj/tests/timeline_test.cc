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

#include "tieml/timeline.h"

#include "doctest.h"
#include "test_support.h"

namespace tieml {
namespace {

Timeline FixtureTimeline(const std::string &name) {
  return BuildTimeline(testing::ParseFixture(name).documents.at(0));
}

std::set<EventId> Ids(std::initializer_list<int> ids) {
  std::set<EventId> out;
  for (int id : ids) out.insert(EventId(id));
  return out;
}

TEST_CASE("recipe timeline") {
  Timeline t = FixtureTimeline("recipe_inversion.tieml");
  REQUIRE(t.slots.size() == 2);
  CHECK(t.slots[0] == SlotGroup{TimeSlot(1), Ids({2})});
  CHECK(t.slots[1] == SlotGroup{TimeSlot(2), Ids({1})});
  CHECK(t.presentation == std::vector{EventId(1), EventId(2)});
  CHECK(OverlappingEvents(t, TimeSlot(1)) == Ids({2}));
  CHECK(OverlappingEvents(t, TimeSlot(5)).empty());
  CHECK(InversionCount(t) == 1);
  CHECK_FALSE(IsMonotone(t));
}

TEST_CASE("shared slot timeline") {
  Timeline t = FixtureTimeline("shared_slot.tieml");
  REQUIRE(t.slots.size() == 1);
  CHECK(t.slots[0] == SlotGroup{TimeSlot(1), Ids({1, 2})});
  CHECK(OverlappingEvents(t, TimeSlot(1)) == Ids({1, 2}));
  CHECK(InversionCount(t) == 0);
  CHECK(RenderTiers(t) == "E:\t1\t2\nT:\t1\t1\n");
}

TEST_CASE("ordered and shuffled steps") {
  Timeline ordered = FixtureTimeline("ordered_steps.tieml");
  CHECK(IsMonotone(ordered));
  Timeline shuffled = FixtureTimeline("shuffled_steps.tieml");
  CHECK(InversionCount(shuffled) == testing::BruteForceInversions({3, 1, 2}));
  CHECK(InversionCount(shuffled) == 2);
}

TEST_CASE("singleton and empty timelines") {
  Corpus one = Parse(R"(<s><c eventid="1" timeslot="1">x</c></s>)").corpus;
  Timeline t = BuildTimeline(one.documents[0]);
  CHECK(t.slots == std::vector{SlotGroup{TimeSlot(1), Ids({1})}});
  CHECK(t.presentation == std::vector{EventId(1)});
  CHECK(IsMonotone(Timeline{}));
  CHECK(InversionCount(Timeline{}) == 0);
}

TEST_CASE("events without slots stay in the presentation tier") {
  Corpus corpus = Parse(R"(<s><c eventid="1" timeslot="2">a</c><c eventid="2">b</c><c>c</c></s>)").corpus;
  Timeline t = BuildTimeline(corpus.documents[0]);
  CHECK(t.presentation == std::vector{EventId(1), EventId(2)});
  CHECK(t.slots.size() == 1);
  CHECK(RenderTiers(t) == "E:\t1\t2\nT:\t2\t_\n");
}

TEST_CASE("build errors") {
  Corpus dup = Parse(R"(<s><c eventid="1">a</c><c eventid="1">b</c></s>)").corpus;
  CHECK_THROWS_AS(BuildTimeline(dup.documents[0]), TimelineError);
  Corpus orphan = Parse(R"(<s><c timeslot="1">a</c></s>)").corpus;
  CHECK_THROWS_AS(BuildTimeline(orphan.documents[0]), TimelineError);
}

TEST_CASE("inversion count matches brute force") {
  std::mt19937 rng(7);
  for (int round = 0; round < 500; ++round) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 60)(rng);
    std::uint32_t max_slot = std::uniform_int_distribution<std::uint32_t>(1, 10)(rng);
    std::vector<std::uint32_t> values(n);
    for (auto &v : values) v = std::uniform_int_distribution<std::uint32_t>(1, max_slot)(rng);
    std::uint64_t count = CountInversions(values);
    CHECK(count == testing::BruteForceInversions(values));
    CHECK(count <= n * (n > 0 ? n - 1 : 0) / 2);
    CHECK((count == 0) == std::is_sorted(values.begin(), values.end()));
  }
}

TEST_CASE("timeline partitions the slotted events") {
  testing::CorpusGenerator generator(99);
  for (int round = 0; round < 200; ++round) {
    Corpus corpus = generator.Next();
    for (const Document &document : corpus.documents) {
      std::set<std::uint32_t> ids;
      bool unique = true;
      bool orphan = false;
      std::size_t slotted = 0;
      for (const Clause *c : document.Clauses()) {
        if (c->event_id) unique = unique && ids.insert(c->event_id->value()).second;
        if (c->time_slot && !c->event_id) orphan = true;
        if (c->time_slot && c->event_id) ++slotted;
      }
      if (!unique || orphan) {
        CHECK_THROWS_AS(BuildTimeline(document), TimelineError);
        continue;
      }
      Timeline t = BuildTimeline(document);
      std::size_t total = 0;
      for (const SlotGroup &g : t.slots) total += g.events.size();
      CHECK(total == slotted);
      CHECK(std::is_sorted(t.slots.begin(), t.slots.end(),
                           [](const SlotGroup &a, const SlotGroup &b) { return a.slot < b.slot; }));
    }
  }
}

}  // namespace
}  // namespace tieml
