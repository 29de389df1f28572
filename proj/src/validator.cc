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

#include "tieml/validator.h"

#include <algorithm>
#include <map>
#include <optional>

#include "tieml/reichenbach.h"

namespace tieml {

std::string_view SeverityName(Severity severity) {
  switch (severity) {
    case Severity::kError: return "error";
    case Severity::kWarning: return "warning";
    case Severity::kInfo: return "info";
  }
  return "";
}

std::string_view DiagnosticCodeName(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kDupEventId: return "DUP_EVENT_ID";
    case DiagnosticCode::kEventOrder: return "EVENT_ORDER";
    case DiagnosticCode::kEventGap: return "EVENT_GAP";
    case DiagnosticCode::kTenseTripleMismatch: return "TENSE_TRIPLE_MISMATCH";
    case DiagnosticCode::kPerfectMismatch: return "PERFECT_MISMATCH";
    case DiagnosticCode::kErsPartial: return "ERS_PARTIAL";
    case DiagnosticCode::kSlotNoEvent: return "SLOT_NO_EVENT";
    case DiagnosticCode::kTimeslotGap: return "TIMESLOT_GAP";
    case DiagnosticCode::kTimeslotPartial: return "TIMESLOT_PARTIAL";
    case DiagnosticCode::kUnknownAttribute: return "UNKNOWN_ATTRIBUTE";
  }
  return "";
}

namespace {

struct LocatedClause {
  const Clause *clause;
  Location location;
};

std::vector<LocatedClause> ClausesOf(const Document &document, std::size_t doc_index) {
  std::vector<LocatedClause> out;
  for (std::size_t s = 0; s < document.sentences.size(); ++s) {
    const auto &clauses = document.sentences[s].clauses();
    for (std::size_t c = 0; c < clauses.size(); ++c) out.push_back({&clauses[c], {doc_index, s, c}});
  }
  return out;
}

std::string TripleText(const ReichenbachTriple &t) {
  return "(E=" + std::to_string(t.e()) + ", R=" + std::to_string(t.r()) +
         ", S=" + std::to_string(t.s()) + ")";
}

// Reports missing integers in 1..max of the sorted distinct values. Each gap
// is reported at the first clause carrying the value right after it.
template <typename KeyOf>
void ReportGaps(const std::vector<LocatedClause> &clauses, KeyOf key_of, DiagnosticCode code,
                const char *what, std::vector<Diagnostic> &out) {
  std::map<std::uint32_t, Location> first;
  for (const LocatedClause &lc : clauses) {
    if (std::optional<std::uint32_t> key = key_of(*lc.clause)) first.try_emplace(*key, lc.location);
  }
  std::uint32_t expected = 1;
  for (const auto &[value, location] : first) {
    if (value > expected) {
      std::string missing = value - expected == 1
                                ? std::to_string(expected)
                                : std::to_string(expected) + ".." + std::to_string(value - 1);
      out.push_back({code, Severity::kInfo, location,
                     std::string(what) + " " + missing + " unused before " + std::to_string(value)});
    }
    expected = value + 1;
  }
}

std::optional<std::uint32_t> EventKey(const Clause &c) {
  if (!c.event_id) return std::nullopt;
  return c.event_id->value();
}

std::optional<std::uint32_t> SlotKey(const Clause &c) {
  if (!c.event_id || !c.time_slot) return std::nullopt;
  return c.time_slot->value();
}

}  // namespace

std::vector<Diagnostic> CheckTenseConsistency(const Clause &clause, Location location) {
  std::vector<Diagnostic> out;
  std::optional<ReichenbachTriple> triple = clause.triple();
  if (!clause.tense || !clause.tense->closed() || !triple) return out;

  TenseCategory category = ClassifyTense(*triple);
  ReferenceRelation expected = ReferenceRelationOf(*clause.tense->closed());
  if (category.reference != expected) {
    out.push_back({DiagnosticCode::kTenseTripleMismatch, Severity::kError, location,
                   "tense " + std::string(TenseName(*clause.tense->closed())) + " needs a " +
                       std::string(ReferenceRelationName(expected)) + " reference time but " +
                       TripleText(*triple) + " is " +
                       std::string(TraditionalLabel(category))});
  }

  bool perfect = EffectiveFlags(clause).perfect;
  bool anterior = category.event == EventRelation::kAnterior;
  if (perfect && !anterior) {
    out.push_back({DiagnosticCode::kPerfectMismatch, Severity::kWarning, location,
                   "perfect aspect but event time is not before reference time in " +
                       TripleText(*triple)});
  } else if (!perfect && anterior) {
    out.push_back({DiagnosticCode::kPerfectMismatch, Severity::kWarning, location,
                   "event time precedes reference time in " + TripleText(*triple) +
                       " but the clause is not marked perfect"});
  }
  return out;
}

std::vector<Diagnostic> CheckEventIds(const Corpus &corpus) {
  std::vector<Diagnostic> out;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    std::vector<LocatedClause> clauses = ClausesOf(corpus.documents[d], d);
    std::map<std::uint32_t, Location> seen;
    std::optional<std::uint32_t> highest;
    for (const LocatedClause &lc : clauses) {
      if (!lc.clause->event_id) continue;
      std::uint32_t id = lc.clause->event_id->value();
      auto [it, inserted] = seen.try_emplace(id, lc.location);
      if (!inserted) {
        out.push_back({DiagnosticCode::kDupEventId, Severity::kError, lc.location,
                       "eventid " + std::to_string(id) + " already used at clause " +
                           std::to_string(it->second.sentence + 1) + ":" +
                           std::to_string(it->second.clause + 1)});
        continue;
      }
      if (highest && id < *highest) {
        out.push_back({DiagnosticCode::kEventOrder, Severity::kWarning, lc.location,
                       "eventid " + std::to_string(id) + " follows eventid " +
                           std::to_string(*highest) + " in presentation order"});
      }
      highest = std::max(highest.value_or(0), id);
    }
    ReportGaps(clauses, EventKey, DiagnosticCode::kEventGap, "eventid", out);
  }
  return out;
}

std::vector<Diagnostic> CheckTimeslots(const Corpus &corpus) {
  std::vector<Diagnostic> out;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    std::vector<LocatedClause> clauses = ClausesOf(corpus.documents[d], d);
    bool any_slotted_event = false;
    for (const LocatedClause &lc : clauses) {
      if (lc.clause->event_id && lc.clause->time_slot) any_slotted_event = true;
    }
    for (const LocatedClause &lc : clauses) {
      const Clause &c = *lc.clause;
      if (c.time_slot && !c.event_id) {
        out.push_back({DiagnosticCode::kSlotNoEvent, Severity::kError, lc.location,
                       "timeslot " + std::to_string(c.time_slot->value()) + " on a clause without eventid"});
      } else if (any_slotted_event && c.event_id && !c.time_slot) {
        out.push_back({DiagnosticCode::kTimeslotPartial, Severity::kWarning, lc.location,
                       "eventid " + std::to_string(c.event_id->value()) +
                           " has no timeslot while other events in the document do"});
      }
    }
    ReportGaps(clauses, SlotKey, DiagnosticCode::kTimeslotGap, "timeslot", out);
  }
  return out;
}

std::vector<Diagnostic> CheckTriples(const Corpus &corpus) {
  std::vector<Diagnostic> out;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    for (const LocatedClause &lc : ClausesOf(corpus.documents[d], d)) {
      const Clause &c = *lc.clause;
      if (!c.has_partial_triple()) continue;
      std::string missing;
      if (!c.e) missing += "E";
      if (!c.r) missing += missing.empty() ? "R" : ", R";
      if (!c.s) missing += missing.empty() ? "S" : ", S";
      out.push_back({DiagnosticCode::kErsPartial, Severity::kError, lc.location,
                     "incomplete Reichenbach triple, missing " + missing});
    }
  }
  return out;
}

std::vector<Diagnostic> Validate(const Corpus &corpus) {
  std::vector<Diagnostic> out = CheckTriples(corpus);
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    for (const LocatedClause &lc : ClausesOf(corpus.documents[d], d)) {
      std::vector<Diagnostic> found = CheckTenseConsistency(*lc.clause, lc.location);
      out.insert(out.end(), found.begin(), found.end());
    }
  }
  for (auto check : {CheckEventIds, CheckTimeslots}) {
    std::vector<Diagnostic> found = check(corpus);
    out.insert(out.end(), found.begin(), found.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic &a, const Diagnostic &b) {
    return a.location < b.location;
  });
  return out;
}

bool HasErrors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic &d) { return d.severity == Severity::kError; });
}

std::string FormatDiagnostic(const Diagnostic &d, std::string_view file) {
  return std::string(file) + ":" + std::to_string(d.location.document + 1) + ":" +
         std::to_string(d.location.sentence + 1) + ":" + std::to_string(d.location.clause + 1) +
         " " + std::string(DiagnosticCodeName(d.code)) + " " + std::string(SeverityName(d.severity)) +
         " " + d.message;
}

}  // namespace tieml
