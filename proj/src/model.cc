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

#include "tieml/model.h"

#include <algorithm>
#include <cctype>

namespace tieml {

namespace {

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view TenseName(Tense tense) {
  switch (tense) {
    case Tense::kPast: return "PAST";
    case Tense::kPresent: return "PRES";
    case Tense::kFuture: return "FUT";
  }
  return "";
}

TenseLabel::TenseLabel(std::string raw) : raw_(std::move(raw)) {
  for (Tense t : {Tense::kPast, Tense::kPresent, Tense::kFuture}) {
    if (EqualsIgnoreCase(raw_, TenseName(t))) closed_ = t;
  }
}

std::string TenseLabel::key() const {
  return closed_ ? std::string(TenseName(*closed_)) : raw_;
}

bool operator==(const TenseLabel &a, const TenseLabel &b) {
  if (a.closed_ && b.closed_) return *a.closed_ == *b.closed_;
  return a.raw_ == b.raw_;
}

std::optional<ReichenbachTriple> Clause::triple() const {
  if (!e || !r || !s) return std::nullopt;
  return ReichenbachTriple(*e, *r, *s);
}

void Clause::set_triple(const ReichenbachTriple &t) {
  e = TimePoint(t.e());
  r = TimePoint(t.r());
  s = TimePoint(t.s());
}

bool Clause::has_partial_triple() const {
  int present = e.has_value() + r.has_value() + s.has_value();
  return present > 0 && present < 3;
}

AspectFlags EffectiveFlags(const Clause &clause) {
  return {clause.perfect.value_or(false), clause.progressive.value_or(false)};
}

Sentence::Sentence(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  if (clauses_.empty()) {
    throw std::invalid_argument("a sentence needs at least one clause");
  }
}

std::vector<const Clause *> Document::Clauses() const {
  std::vector<const Clause *> out;
  for (const Sentence &sentence : sentences) {
    for (const Clause &clause : sentence.clauses()) out.push_back(&clause);
  }
  return out;
}

std::optional<bool> ParseBoolean(std::string_view text) {
  if (EqualsIgnoreCase(text, "TRUE")) return true;
  if (EqualsIgnoreCase(text, "FALSE")) return false;
  return std::nullopt;
}

}  // namespace tieml
