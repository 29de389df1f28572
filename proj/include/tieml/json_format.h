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

#ifndef TIEML_JSON_FORMAT_H_
#define TIEML_JSON_FORMAT_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "tieml/format_error.h"
#include "tieml/model.h"
#include "tieml/timeline.h"

namespace tieml {

// Corpus JSON layout (see docs/formats.md):
//   {"documents":[{"id":"","sentences":[{"clauses":[
//      {"eventid":1,"timeslot":null,"tense":"PAST","perfect":null,
//       "progressive":null,"E":-1,"R":-1,"S":0,"reference":null,
//       "text":"..."}]}]}]}
nlohmann::ordered_json CorpusToJsonValue(const Corpus &corpus);
Corpus CorpusFromJsonValue(const nlohmann::ordered_json &value);

// Compact encoding; an empty corpus is {"documents":[]}.
std::string ToJson(const Corpus &corpus);

// Throws FormatError with the offending JSON pointer.
Corpus FromJson(std::string_view text);

// {"slots":[{"slot":1,"events":[2]},...],"presentation":[1,2],"inversions":1}
nlohmann::ordered_json TimelineToJson(const Timeline &timeline);

}  // namespace tieml

#endif  // TIEML_JSON_FORMAT_H_
