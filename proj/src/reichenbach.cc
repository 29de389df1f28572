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

#include "tieml/reichenbach.h"

namespace tieml {

const std::array<TenseCategory, 9> kAllTenseCategories = {{
    {ReferenceRelation::kPast, EventRelation::kAnterior},
    {ReferenceRelation::kPast, EventRelation::kSimple},
    {ReferenceRelation::kPast, EventRelation::kPosterior},
    {ReferenceRelation::kPresent, EventRelation::kAnterior},
    {ReferenceRelation::kPresent, EventRelation::kSimple},
    {ReferenceRelation::kPresent, EventRelation::kPosterior},
    {ReferenceRelation::kFuture, EventRelation::kAnterior},
    {ReferenceRelation::kFuture, EventRelation::kSimple},
    {ReferenceRelation::kFuture, EventRelation::kPosterior},
}};

TenseCategory ClassifyTense(const ReichenbachTriple &triple) {
  ReferenceRelation reference = triple.r() < triple.s()    ? ReferenceRelation::kPast
                                : triple.r() == triple.s() ? ReferenceRelation::kPresent
                                                           : ReferenceRelation::kFuture;
  EventRelation event = triple.e() < triple.r()    ? EventRelation::kAnterior
                        : triple.e() == triple.r() ? EventRelation::kSimple
                                                   : EventRelation::kPosterior;
  return {reference, event};
}

std::string_view TraditionalLabel(TenseCategory category) {
  static constexpr std::string_view kLabels[3][3] = {
      {"Pluperfect", "Simple Past", "Posterior Past"},
      {"Present Perfect", "Simple Present", "Posterior Present"},
      {"Future Perfect", "Simple Future", "Posterior Future"},
  };
  return kLabels[static_cast<int>(category.reference)][static_cast<int>(category.event)];
}

ReichenbachTriple CanonicalTriple(TenseCategory category) {
  int r = static_cast<int>(category.reference) - 1;
  int e = r + static_cast<int>(category.event) - 1;
  return ReichenbachTriple(e, r, 0);
}

ReichenbachTriple NormalizeTriple(const ReichenbachTriple &triple) {
  return CanonicalTriple(ClassifyTense(triple));
}

std::string_view ReferenceRelationName(ReferenceRelation relation) {
  switch (relation) {
    case ReferenceRelation::kPast: return "Past";
    case ReferenceRelation::kPresent: return "Present";
    case ReferenceRelation::kFuture: return "Future";
  }
  return "";
}

std::string_view EventRelationName(EventRelation relation) {
  switch (relation) {
    case EventRelation::kAnterior: return "Anterior";
    case EventRelation::kSimple: return "Simple";
    case EventRelation::kPosterior: return "Posterior";
  }
  return "";
}

ReferenceRelation ReferenceRelationOf(Tense tense) {
  switch (tense) {
    case Tense::kPast: return ReferenceRelation::kPast;
    case Tense::kPresent: return ReferenceRelation::kPresent;
    case Tense::kFuture: return ReferenceRelation::kFuture;
  }
  return ReferenceRelation::kPresent;
}

}  // namespace tieml
