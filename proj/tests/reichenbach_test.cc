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

#include <set>
#include <utility>

#include "doctest.h"

namespace tieml {
namespace {

// Independent comparator: category indices straight from the two pairwise
// order tests, written without the library's enum plumbing.
std::pair<int, int> OracleCategory(int e, int r, int s) {
  int reference = (r > s) - (r < s);  // -1 past, 0 present, 1 future
  int event = (e > r) - (e < r);      // -1 anterior, 0 simple, 1 posterior
  return {reference, event};
}

std::pair<int, int> AsIndices(TenseCategory c) {
  return {static_cast<int>(c.reference) - 1, static_cast<int>(c.event) - 1};
}

TEST_CASE("classify tense on annotated examples") {
  CHECK(ClassifyTense({-1, -1, 0}) == TenseCategory{ReferenceRelation::kPast, EventRelation::kSimple});
  CHECK(ClassifyTense({-2, -1, 0}) == TenseCategory{ReferenceRelation::kPast, EventRelation::kAnterior});
  CHECK(ClassifyTense({1, 1, 0}) == TenseCategory{ReferenceRelation::kFuture, EventRelation::kSimple});
  CHECK(ClassifyTense({0, 0, 0}) == TenseCategory{ReferenceRelation::kPresent, EventRelation::kSimple});
  CHECK(ClassifyTense({1, 1, 2}) == TenseCategory{ReferenceRelation::kPast, EventRelation::kSimple});
  CHECK(ClassifyTense({0, -1, 0}) == TenseCategory{ReferenceRelation::kPast, EventRelation::kPosterior});
}

TEST_CASE("out of range triples are rejected at construction") {
  CHECK_THROWS_AS(ReichenbachTriple(3, 0, 0), RangeError);
  CHECK_THROWS_AS(ReichenbachTriple(0, -3, 0), RangeError);
  CHECK_THROWS_AS(ReichenbachTriple(0, 0, 7), RangeError);
  CHECK_NOTHROW(ReichenbachTriple(-2, 2, -2));
}

TEST_CASE("classification matches brute force on every triple") {
  std::set<std::pair<int, int>> reached;
  for (int e = -2; e <= 2; ++e) {
    for (int r = -2; r <= 2; ++r) {
      for (int s = -2; s <= 2; ++s) {
        auto got = AsIndices(ClassifyTense({e, r, s}));
        CHECK(got == OracleCategory(e, r, s));
        reached.insert(got);
      }
    }
  }
  CHECK(reached.size() == 9);
}

TEST_CASE("traditional labels") {
  using R = ReferenceRelation;
  using E = EventRelation;
  CHECK(TraditionalLabel({R::kPast, E::kAnterior}) == "Pluperfect");
  CHECK(TraditionalLabel({R::kPast, E::kSimple}) == "Simple Past");
  CHECK(TraditionalLabel({R::kPast, E::kPosterior}) == "Posterior Past");
  CHECK(TraditionalLabel({R::kPresent, E::kAnterior}) == "Present Perfect");
  CHECK(TraditionalLabel({R::kPresent, E::kSimple}) == "Simple Present");
  CHECK(TraditionalLabel({R::kPresent, E::kPosterior}) == "Posterior Present");
  CHECK(TraditionalLabel({R::kFuture, E::kAnterior}) == "Future Perfect");
  CHECK(TraditionalLabel({R::kFuture, E::kSimple}) == "Simple Future");
  CHECK(TraditionalLabel({R::kFuture, E::kPosterior}) == "Posterior Future");
}

TEST_CASE("canonical triples") {
  using R = ReferenceRelation;
  using E = EventRelation;
  CHECK(CanonicalTriple({R::kPast, E::kSimple}) == ReichenbachTriple(-1, -1, 0));
  CHECK(CanonicalTriple({R::kPast, E::kAnterior}) == ReichenbachTriple(-2, -1, 0));
  CHECK(CanonicalTriple({R::kPresent, E::kSimple}) == ReichenbachTriple(0, 0, 0));
  CHECK(CanonicalTriple({R::kFuture, E::kSimple}) == ReichenbachTriple(1, 1, 0));
  CHECK(CanonicalTriple({R::kFuture, E::kPosterior}) == ReichenbachTriple(2, 1, 0));
  CHECK(CanonicalTriple({R::kPresent, E::kAnterior}) == ReichenbachTriple(-1, 0, 0));
  CHECK(CanonicalTriple({R::kPresent, E::kPosterior}) == ReichenbachTriple(1, 0, 0));

  for (TenseCategory c : kAllTenseCategories) {
    ReichenbachTriple t = CanonicalTriple(c);
    CHECK(ClassifyTense(t) == c);
    CHECK(t.s() == 0);
    // Unit steps between distinct adjacent positions.
    std::set<int> positions = {t.e(), t.r(), t.s()};
    for (auto it = positions.begin(); std::next(it) != positions.end(); ++it) {
      CHECK(*std::next(it) - *it == 1);
    }
    // Sign encodes the reference relation.
    switch (c.reference) {
      case R::kPast: CHECK(t.r() < 0); break;
      case R::kPresent: CHECK(t.r() == 0); break;
      case R::kFuture: CHECK(t.r() > 0); break;
    }
  }
}

TEST_CASE("normalize triple") {
  CHECK(NormalizeTriple({1, 1, 2}) == ReichenbachTriple(-1, -1, 0));
  CHECK(NormalizeTriple({-1, -1, 0}) == ReichenbachTriple(-1, -1, 0));
  CHECK(NormalizeTriple({2, 1, 0}) == ReichenbachTriple(2, 1, 0));

  for (int e = -2; e <= 2; ++e) {
    for (int r = -2; r <= 2; ++r) {
      for (int s = -2; s <= 2; ++s) {
        ReichenbachTriple t(e, r, s);
        ReichenbachTriple n = NormalizeTriple(t);
        CHECK(NormalizeTriple(n) == n);
        CHECK(ClassifyTense(n) == ClassifyTense(t));
      }
    }
  }
}

TEST_CASE("classification is translation invariant") {
  for (int e = -2; e <= 2; ++e) {
    for (int r = -2; r <= 2; ++r) {
      for (int s = -2; s <= 2; ++s) {
        for (int k = -4; k <= 4; ++k) {
          auto in_range = [](int v) { return v >= -2 && v <= 2; };
          if (!in_range(e + k) || !in_range(r + k) || !in_range(s + k)) continue;
          CHECK(ClassifyTense({e + k, r + k, s + k}) == ClassifyTense({e, r, s}));
        }
      }
    }
  }
}

}  // namespace
}  // namespace tieml
