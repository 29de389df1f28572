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

#ifndef TIEML_TIMEML_H_
#define TIEML_TIMEML_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tieml/model.h"

namespace tieml {

class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// TLINK relTypes of the TimeML 1.2.1 specification.
enum class TimeMLRelation {
  kBefore,
  kAfter,
  kIBefore,
  kIAfter,
  kIncludes,
  kIsIncluded,
  kDuring,
  kDuringInv,
  kSimultaneous,
  kIdentity,
  kBegins,
  kBegunBy,
  kEnds,
  kEndedBy,
};

std::string_view TimeMLRelationName(TimeMLRelation relation);

// Case-insensitive; also accepts the aliases listed in docs/formats.md.
std::optional<TimeMLRelation> ParseTimeMLRelation(std::string_view name);

struct TimeMLEvent {
  std::string eid;
  std::string text;
  std::optional<std::string> tense;
  std::optional<std::string> aspect;

  friend bool operator==(const TimeMLEvent &, const TimeMLEvent &) = default;
};

struct TimeMLTimex {
  std::string tid;
  std::string text;
  // TIMEX3 value attribute; never produced by export (no normalization).
  std::optional<std::string> value;

  friend bool operator==(const TimeMLTimex &, const TimeMLTimex &) = default;
};

struct TimeMLLink {
  std::string from;
  std::string to;
  // relType as written; relation() is empty for names outside the
  // vocabulary.
  std::string rel_type;

  std::optional<TimeMLRelation> relation() const { return ParseTimeMLRelation(rel_type); }

  friend bool operator==(const TimeMLLink &, const TimeMLLink &) = default;
};

// One TimeML document. Only TLINKs are modeled; SLINK/ALINK and SIGNAL
// elements met on input are counted so that import can report them.
struct TimeMLDoc {
  std::string id;
  std::vector<TimeMLEvent> events;
  std::vector<TimeMLTimex> timexes;
  std::vector<TimeMLLink> tlinks;
  std::vector<std::string> unsupported_links;  // e.g. "SLINK l3"
  std::size_t signals = 0;

  friend bool operator==(const TimeMLDoc &, const TimeMLDoc &) = default;
};

// Throws ConversionError unless ids are unique and every link endpoint names
// an event or a timex.
void CheckTimeMLDoc(const TimeMLDoc &doc);

// Events are the clauses with an eventid, in presentation order, as
// "e<eventid>". Each reference string becomes a TIMEX3 "t<k>" linked to its
// event with IS_INCLUDED. Events sharing a slot get one SIMULTANEOUS link
// per unordered pair; every pair across consecutive slot groups gets a
// BEFORE link. The transitive closure is not materialized.
TimeMLDoc ToTimeML(const Document &document);

// One TimeMLDoc per document. Throws ConversionError if the corpus has
// Error-level validation findings.
std::vector<TimeMLDoc> ToTimeML(const Corpus &corpus);

struct LossEntry {
  std::string document;  // TimeML document id
  std::string kind;      // stable tag, see docs/formats.md
  std::string detail;

  friend bool operator==(const LossEntry &, const LossEntry &) = default;
};

struct LossReport {
  std::vector<LossEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t Count(std::string_view kind) const;
  nlohmann::ordered_json ToJsonValue() const;
};

struct TimeMLImport {
  Corpus corpus;
  LossReport loss;
};

// Events become clauses (one sentence per document) numbered 1..n in
// document order. Timeslots come from longest-path layering of the
// before-order over groups of events merged by simultaneity and inclusion.
// Events in no ordering or merging link get no timeslot. Throws
// ConversionError naming a cycle if the before-order is cyclic.
TimeMLImport FromTimeML(std::span<const TimeMLDoc> docs);

// TimeML XML. A single document is written as <TimeML>; several are wrapped
// in <TimeMLCollection>. Export emits EVENT, MAKEINSTANCE, TIMEX3 and TLINK.
std::string WriteTimeML(std::span<const TimeMLDoc> docs);

// Reads <TimeML> or <TimeMLCollection>. EVENT/TIMEX3 may appear anywhere
// inside <TimeML> (e.g. inline in <TEXT>); tense and aspect are taken from
// EVENT or from the MAKEINSTANCE that instantiates it, and TLINK endpoints
// may name event instances. Throws ConversionError with line:column.
std::vector<TimeMLDoc> ReadTimeML(std::string_view xml);

}  // namespace tieml

#endif  // TIEML_TIMEML_H_
