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

#include <algorithm>
#include <map>

namespace tieml {

std::optional<TimeSlot> Timeline::SlotOf(EventId event) const {
  for (const SlotGroup &group : slots) {
    if (group.events.count(event)) return group.slot;
  }
  return std::nullopt;
}

Timeline BuildTimeline(const Document &document) {
  Timeline timeline;
  std::map<TimeSlot, std::set<EventId>> groups;
  std::set<EventId> seen;
  for (const Clause *clause : document.Clauses()) {
    if (!clause->event_id) {
      if (clause->time_slot) {
        throw TimelineError("timeslot " + std::to_string(clause->time_slot->value()) +
                            " on a clause without eventid");
      }
      continue;
    }
    EventId id = *clause->event_id;
    if (!seen.insert(id).second) {
      throw TimelineError("duplicate eventid " + std::to_string(id.value()));
    }
    timeline.presentation.push_back(id);
    if (clause->time_slot) groups[*clause->time_slot].insert(id);
  }
  for (auto &[slot, events] : groups) timeline.slots.push_back({slot, std::move(events)});
  return timeline;
}

std::set<EventId> OverlappingEvents(const Timeline &timeline, TimeSlot slot) {
  auto it = std::lower_bound(timeline.slots.begin(), timeline.slots.end(), slot,
                             [](const SlotGroup &g, TimeSlot s) { return g.slot < s; });
  if (it == timeline.slots.end() || it->slot != slot) return {};
  return it->events;
}

namespace {

std::uint64_t SortCount(std::vector<std::uint32_t> &v, std::vector<std::uint32_t> &scratch,
                        std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = SortCount(v, scratch, lo, mid) + SortCount(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    // Equal values are taken from the left run first so they never count.
    if (v[i] <= v[j]) {
      scratch[k++] = v[i++];
    } else {
      count += mid - i;
      scratch[k++] = v[j++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, v.begin() + lo);
  return count;
}

}  // namespace

std::uint64_t CountInversions(std::span<const std::uint32_t> values) {
  std::vector<std::uint32_t> v(values.begin(), values.end());
  std::vector<std::uint32_t> scratch(v.size());
  return SortCount(v, scratch, 0, v.size());
}

std::uint64_t InversionCount(const Timeline &timeline) {
  std::map<EventId, std::uint32_t> slot_of;
  for (const SlotGroup &group : timeline.slots) {
    for (EventId id : group.events) slot_of.emplace(id, group.slot.value());
  }
  std::vector<std::uint32_t> sequence;
  for (EventId id : timeline.presentation) {
    auto it = slot_of.find(id);
    if (it != slot_of.end()) sequence.push_back(it->second);
  }
  return CountInversions(sequence);
}

bool IsMonotone(const Timeline &timeline) { return InversionCount(timeline) == 0; }

std::string RenderTiers(const Timeline &timeline) {
  std::map<EventId, std::uint32_t> slot_of;
  for (const SlotGroup &group : timeline.slots) {
    for (EventId id : group.events) slot_of.emplace(id, group.slot.value());
  }
  std::string events = "E:";
  std::string slots = "T:";
  for (EventId id : timeline.presentation) {
    events += '\t' + std::to_string(id.value());
    auto it = slot_of.find(id);
    slots += '\t' + (it == slot_of.end() ? std::string("_") : std::to_string(it->second));
  }
  return events + "\n" + slots + "\n";
}

}  // namespace tieml
