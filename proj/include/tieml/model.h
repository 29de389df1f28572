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

#ifndef TIEML_MODEL_H_
#define TIEML_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tieml {

// Thrown when a value is constructed outside its permitted range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Strictly positive integer index. The tag keeps event ids and timeslots
// from being mixed up.
template <typename Tag>
class PositiveIndex {
 public:
  explicit PositiveIndex(std::int64_t value) {
    if (value < 1 || value > INT32_MAX) {
      throw RangeError(std::string(Tag::kName) + " must be a positive integer, got " +
                       std::to_string(value));
    }
    value_ = static_cast<std::uint32_t>(value);
  }

  std::uint32_t value() const { return value_; }

  friend auto operator<=>(const PositiveIndex &, const PositiveIndex &) = default;

 private:
  std::uint32_t value_;
};

struct EventIdTag {
  static constexpr std::string_view kName = "eventid";
};
struct TimeSlotTag {
  static constexpr std::string_view kName = "timeslot";
};

using EventId = PositiveIndex<EventIdTag>;
using TimeSlot = PositiveIndex<TimeSlotTag>;

// A single Reichenbach time variable. Negative values lie before speech
// time, zero is the present, positive values lie after.
class TimePoint {
 public:
  static constexpr int kMin = -2;
  static constexpr int kMax = 2;

  explicit TimePoint(std::int64_t value) {
    if (value < kMin || value > kMax) {
      throw RangeError("time point " + std::to_string(value) + " outside [-2, 2]");
    }
    value_ = static_cast<int>(value);
  }

  int value() const { return value_; }

  friend auto operator<=>(const TimePoint &, const TimePoint &) = default;

 private:
  int value_;
};

// Event, reference and speech time of one clause.
class ReichenbachTriple {
 public:
  ReichenbachTriple(std::int64_t e, std::int64_t r, std::int64_t s)
      : e_(e), r_(r), s_(s) {}
  ReichenbachTriple(TimePoint e, TimePoint r, TimePoint s) : e_(e), r_(r), s_(s) {}

  int e() const { return e_.value(); }
  int r() const { return r_.value(); }
  int s() const { return s_.value(); }

  friend bool operator==(const ReichenbachTriple &, const ReichenbachTriple &) = default;

 private:
  TimePoint e_;
  TimePoint r_;
  TimePoint s_;
};

enum class Tense { kPast, kPresent, kFuture };

// Canonical attribute spelling: PAST, PRES, FUT.
std::string_view TenseName(Tense tense);

// Tense attribute value. PAST/PRES/FUT are recognized case-insensitively;
// anything else is a language-specific code kept byte for byte.
class TenseLabel {
 public:
  explicit TenseLabel(std::string raw);
  explicit TenseLabel(Tense tense) : TenseLabel(std::string(TenseName(tense))) {}

  const std::string &raw() const { return raw_; }
  std::optional<Tense> closed() const { return closed_; }

  // Histogram key: canonical name for closed values, raw text otherwise.
  std::string key() const;

  friend bool operator==(const TenseLabel &a, const TenseLabel &b);

 private:
  std::string raw_;
  std::optional<Tense> closed_;
};

// One annotated clause (a <c> element). Absent attributes stay absent.
struct Clause {
  std::optional<EventId> event_id;
  std::optional<TimeSlot> time_slot;
  std::optional<TenseLabel> tense;
  std::optional<bool> perfect;
  std::optional<bool> progressive;
  // E, R and S are stored individually so that incomplete annotations
  // survive parsing and can be reported by the validator.
  std::optional<TimePoint> e;
  std::optional<TimePoint> r;
  std::optional<TimePoint> s;
  std::optional<std::string> reference;
  std::string text;

  // The full triple, or nullopt unless all of E, R and S are present.
  std::optional<ReichenbachTriple> triple() const;
  void set_triple(const ReichenbachTriple &t);
  // True when some but not all of E, R, S are present.
  bool has_partial_triple() const;

  friend bool operator==(const Clause &, const Clause &) = default;
};

struct AspectFlags {
  bool perfect = false;
  bool progressive = false;
  friend bool operator==(const AspectFlags &, const AspectFlags &) = default;
};

// Resolves absent perfect/progressive attributes to false.
AspectFlags EffectiveFlags(const Clause &clause);

class Sentence {
 public:
  // Throws std::invalid_argument when clauses is empty.
  explicit Sentence(std::vector<Clause> clauses);

  const std::vector<Clause> &clauses() const { return clauses_; }

  friend bool operator==(const Sentence &, const Sentence &) = default;

 private:
  std::vector<Clause> clauses_;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;

  // Clauses in presentation (textual) order.
  std::vector<const Clause *> Clauses() const;

  friend bool operator==(const Document &, const Document &) = default;
};

struct Corpus {
  std::vector<Document> documents;

  friend bool operator==(const Corpus &, const Corpus &) = default;
};

// Parses "TRUE"/"FALSE" in any letter case.
std::optional<bool> ParseBoolean(std::string_view text);

}  // namespace tieml

#endif  // TIEML_MODEL_H_
