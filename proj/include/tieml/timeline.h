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

#ifndef TIEML_TIMELINE_H_
#define TIEML_TIMELINE_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tieml/model.h"

namespace tieml {

class TimelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SlotGroup {
  TimeSlot slot;
  std::set<EventId> events;

  friend bool operator==(const SlotGroup &, const SlotGroup &) = default;
};

// Two-tier view of a document: events grouped by timeslot (ascending) and
// the event ids in presentation order. Events without a timeslot appear in
// the presentation tier only.
struct Timeline {
  std::vector<SlotGroup> slots;
  std::vector<EventId> presentation;

  // Slot of an event, if it has one.
  std::optional<TimeSlot> SlotOf(EventId event) const;

  friend bool operator==(const Timeline &, const Timeline &) = default;
};

// Throws TimelineError on a duplicate event id or a timeslot on a clause
// without an event id.
Timeline BuildTimeline(const Document &document);

// Events sharing the given slot; empty if the slot is unused.
std::set<EventId> OverlappingEvents(const Timeline &timeline, TimeSlot slot);

// Pairs (a, b) with a presented before b but slot(a) > slot(b). Events
// without a slot and pairs sharing a slot do not count.
std::uint64_t InversionCount(const Timeline &timeline);

// Strict inversions of a sequence, O(n log n).
std::uint64_t CountInversions(std::span<const std::uint32_t> values);

bool IsMonotone(const Timeline &timeline);

// Aligned two-row rendering, tab separated:
//   E:  1  2
//   T:  1  1
// Events without a timeslot show "_" in the T row.
std::string RenderTiers(const Timeline &timeline);

}  // namespace tieml

#endif  // TIEML_TIMELINE_H_
