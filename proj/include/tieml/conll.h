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

#ifndef TIEML_CONLL_H_
#define TIEML_CONLL_H_

#include <array>
#include <string>
#include <string_view>

#include "tieml/format_error.h"
#include "tieml/model.h"

namespace tieml {

inline constexpr std::array<std::string_view, 13> kConllColumns = {
    "DOC", "SENT", "CLAUSE", "EVENTID", "TIMESLOT", "TENSE", "PERFECT",
    "PROGRESSIVE", "E", "R", "S", "REFERENCE", "TEXT"};

// Tab-separated, one row per clause, LF line endings, "_" for absent values
// and a blank line after each sentence. DOC/SENT/CLAUSE are 1-based. Each
// document opens with a "# newdoc id = ..." comment so that document ids and
// sentence-less documents survive. String fields escape backslash, tab, LF
// and CR as \\, \t, \n, \r, and a literal "_" as \_.
std::string ToConll(const Corpus &corpus);

// Throws FormatError("line N", ...) on a wrong column count, bad value or
// out-of-sequence index.
Corpus FromConll(std::string_view text);

}  // namespace tieml

#endif  // TIEML_CONLL_H_
