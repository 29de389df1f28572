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

#ifndef TIEML_REICHENBACH_H_
#define TIEML_REICHENBACH_H_

#include <array>
#include <string_view>

#include "tieml/model.h"

namespace tieml {

// Order of reference time relative to speech time.
enum class ReferenceRelation { kPast, kPresent, kFuture };

// Order of event time relative to reference time.
enum class EventRelation { kAnterior, kSimple, kPosterior };

struct TenseCategory {
  ReferenceRelation reference;
  EventRelation event;

  friend bool operator==(const TenseCategory &, const TenseCategory &) = default;
};

// All nine categories, reference relation major.
extern const std::array<TenseCategory, 9> kAllTenseCategories;

// Category from the pairwise order of (R, S) and (E, R). Magnitudes are
// irrelevant; only the order matters.
TenseCategory ClassifyTense(const ReichenbachTriple &triple);

// Traditional grammar name, e.g. "Pluperfect" for (Past, Anterior).
std::string_view TraditionalLabel(TenseCategory category);

// Representative triple with S = 0 and unit steps between distinct
// positions: R is -1, 0 or 1 and E sits one step before, on, or after R.
ReichenbachTriple CanonicalTriple(TenseCategory category);

// CanonicalTriple(ClassifyTense(triple)).
ReichenbachTriple NormalizeTriple(const ReichenbachTriple &triple);

std::string_view ReferenceRelationName(ReferenceRelation relation);
std::string_view EventRelationName(EventRelation relation);

// Reference relation implied by a closed tense label.
ReferenceRelation ReferenceRelationOf(Tense tense);

}  // namespace tieml

#endif  // TIEML_REICHENBACH_H_
