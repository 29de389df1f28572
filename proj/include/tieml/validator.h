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

#ifndef TIEML_VALIDATOR_H_
#define TIEML_VALIDATOR_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tieml/model.h"

namespace tieml {

enum class Severity { kError, kWarning, kInfo };

std::string_view SeverityName(Severity severity);

// Closed set of diagnostic codes. The spelled-out names are stable and
// form part of the command-line output contract.
enum class DiagnosticCode {
  kDupEventId,             // DUP_EVENT_ID: event id repeated within a document
  kEventOrder,             // EVENT_ORDER: ids not increasing in presentation order
  kEventGap,               // EVENT_GAP: ids skip integers in 1..max
  kTenseTripleMismatch,    // TENSE_TRIPLE_MISMATCH: tense label vs R/S order
  kPerfectMismatch,        // PERFECT_MISMATCH: perfect flag vs E/R order
  kErsPartial,             // ERS_PARTIAL: only some of E, R, S present
  kSlotNoEvent,            // SLOT_NO_EVENT: timeslot on a clause without eventid
  kTimeslotGap,            // TIMESLOT_GAP: slot values skip integers
  kTimeslotPartial,        // TIMESLOT_PARTIAL: event clause lacks a timeslot
  kUnknownAttribute,       // UNKNOWN_ATTRIBUTE: lenient-parse finding
};

std::string_view DiagnosticCodeName(DiagnosticCode code);

// 0-based indices into the corpus.
struct Location {
  std::size_t document = 0;
  std::size_t sentence = 0;
  std::size_t clause = 0;

  friend auto operator<=>(const Location &, const Location &) = default;
};

struct Diagnostic {
  DiagnosticCode code;
  Severity severity;
  Location location;
  std::string message;

  friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

// Runs every check and returns the findings ordered by location (stable with
// respect to check order for equal locations).
std::vector<Diagnostic> Validate(const Corpus &corpus);

// Tense label and aspect against the E/R/S triple. Returns nothing unless the
// clause has a PAST/PRES/FUT label and a complete triple.
std::vector<Diagnostic> CheckTenseConsistency(const Clause &clause, Location location = {});

// Uniqueness, order and contiguity of event ids, per document.
std::vector<Diagnostic> CheckEventIds(const Corpus &corpus);

// Timeslot annotation coverage and contiguity, per document.
std::vector<Diagnostic> CheckTimeslots(const Corpus &corpus);

// ERS_PARTIAL for clauses carrying an incomplete triple.
std::vector<Diagnostic> CheckTriples(const Corpus &corpus);

bool HasErrors(std::span<const Diagnostic> diagnostics);

// One line per diagnostic: "file:doc:sent:clause CODE severity message",
// with 1-based indices.
std::string FormatDiagnostic(const Diagnostic &diagnostic, std::string_view file);

}  // namespace tieml

#endif  // TIEML_VALIDATOR_H_
