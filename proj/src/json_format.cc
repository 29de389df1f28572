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

#include "tieml/json_format.h"

#include <set>

#include "tieml/timeline.h"

namespace tieml {

using Json = nlohmann::ordered_json;

namespace {

template <typename T>
Json Nullable(const std::optional<T> &value) {
  return value ? Json(*value) : Json(nullptr);
}

template <typename Index>
Json NullableIndex(const std::optional<Index> &value) {
  return value ? Json(value->value()) : Json(nullptr);
}

Json ClauseToJson(const Clause &c) {
  Json out = Json::object();
  out["eventid"] = NullableIndex(c.event_id);
  out["timeslot"] = NullableIndex(c.time_slot);
  out["tense"] = c.tense ? Json(c.tense->raw()) : Json(nullptr);
  out["perfect"] = Nullable(c.perfect);
  out["progressive"] = Nullable(c.progressive);
  out["E"] = NullableIndex(c.e);
  out["R"] = NullableIndex(c.r);
  out["S"] = NullableIndex(c.s);
  out["reference"] = Nullable(c.reference);
  out["text"] = c.text;
  return out;
}

[[noreturn]] void Fail(const std::string &path, const std::string &detail) {
  throw FormatError(path.empty() ? "/" : path, detail);
}

const Json &Field(const Json &object, const char *key, const std::string &path) {
  auto it = object.find(key);
  if (it == object.end()) Fail(path + "/" + key, "missing field");
  return *it;
}

void CheckKeys(const Json &object, const std::set<std::string> &allowed, const std::string &path) {
  if (!object.is_object()) Fail(path, "expected an object");
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (!allowed.count(it.key())) Fail(path + "/" + it.key(), "unknown field");
  }
}

const Json *Optional(const Json &object, const char *key) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) return nullptr;
  return &*it;
}

template <typename T>
std::optional<T> IntegerField(const Json &object, const char *key, const std::string &path) {
  const Json *value = Optional(object, key);
  if (!value) return std::nullopt;
  std::string where = path + "/" + key;
  if (!value->is_number_integer()) Fail(where, "expected an integer or null");
  try {
    return T(value->get<std::int64_t>());
  } catch (const RangeError &e) {
    Fail(where, e.what());
  }
}

std::optional<std::string> StringField(const Json &object, const char *key, const std::string &path) {
  const Json *value = Optional(object, key);
  if (!value) return std::nullopt;
  if (!value->is_string()) Fail(path + "/" + key, "expected a string or null");
  return value->get<std::string>();
}

std::optional<bool> BoolField(const Json &object, const char *key, const std::string &path) {
  const Json *value = Optional(object, key);
  if (!value) return std::nullopt;
  if (!value->is_boolean()) Fail(path + "/" + key, "expected a boolean or null");
  return value->get<bool>();
}

Clause ClauseFromJson(const Json &value, const std::string &path) {
  static const std::set<std::string> kKeys = {"eventid", "timeslot", "tense",     "perfect",
                                              "progressive", "E",    "R",         "S",
                                              "reference",   "text"};
  CheckKeys(value, kKeys, path);
  Clause c;
  c.event_id = IntegerField<EventId>(value, "eventid", path);
  c.time_slot = IntegerField<TimeSlot>(value, "timeslot", path);
  if (std::optional<std::string> tense = StringField(value, "tense", path)) c.tense = TenseLabel(*tense);
  c.perfect = BoolField(value, "perfect", path);
  c.progressive = BoolField(value, "progressive", path);
  c.e = IntegerField<TimePoint>(value, "E", path);
  c.r = IntegerField<TimePoint>(value, "R", path);
  c.s = IntegerField<TimePoint>(value, "S", path);
  c.reference = StringField(value, "reference", path);
  const Json &text = Field(value, "text", path);
  if (!text.is_string()) Fail(path + "/text", "expected a string");
  c.text = text.get<std::string>();
  return c;
}

const Json &ArrayField(const Json &object, const char *key, const std::string &path) {
  const Json &value = Field(object, key, path);
  if (!value.is_array()) Fail(path + "/" + key, "expected an array");
  return value;
}

}  // namespace

Json CorpusToJsonValue(const Corpus &corpus) {
  Json documents = Json::array();
  for (const Document &document : corpus.documents) {
    Json sentences = Json::array();
    for (const Sentence &sentence : document.sentences) {
      Json clauses = Json::array();
      for (const Clause &clause : sentence.clauses()) clauses.push_back(ClauseToJson(clause));
      sentences.push_back(Json{{"clauses", std::move(clauses)}});
    }
    documents.push_back(Json{{"id", document.id}, {"sentences", std::move(sentences)}});
  }
  return Json{{"documents", std::move(documents)}};
}

Corpus CorpusFromJsonValue(const Json &value) {
  CheckKeys(value, {"documents"}, "");
  Corpus corpus;
  const Json &documents = ArrayField(value, "documents", "");
  for (std::size_t d = 0; d < documents.size(); ++d) {
    std::string doc_path = "/documents/" + std::to_string(d);
    const Json &doc_value = documents[d];
    CheckKeys(doc_value, {"id", "sentences"}, doc_path);
    Document document;
    if (std::optional<std::string> id = StringField(doc_value, "id", doc_path)) document.id = *id;
    const Json &sentences = ArrayField(doc_value, "sentences", doc_path);
    for (std::size_t s = 0; s < sentences.size(); ++s) {
      std::string sent_path = doc_path + "/sentences/" + std::to_string(s);
      CheckKeys(sentences[s], {"clauses"}, sent_path);
      const Json &clause_values = ArrayField(sentences[s], "clauses", sent_path);
      if (clause_values.empty()) Fail(sent_path + "/clauses", "a sentence needs at least one clause");
      std::vector<Clause> clauses;
      for (std::size_t c = 0; c < clause_values.size(); ++c) {
        clauses.push_back(ClauseFromJson(clause_values[c], sent_path + "/clauses/" + std::to_string(c)));
      }
      document.sentences.emplace_back(std::move(clauses));
    }
    corpus.documents.push_back(std::move(document));
  }
  return corpus;
}

std::string ToJson(const Corpus &corpus) { return CorpusToJsonValue(corpus).dump(); }

Corpus FromJson(std::string_view text) {
  Json value;
  try {
    value = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw FormatError("/", std::string("malformed JSON: ") + e.what());
  }
  return CorpusFromJsonValue(value);
}

Json TimelineToJson(const Timeline &timeline) {
  Json slots = Json::array();
  for (const SlotGroup &group : timeline.slots) {
    Json events = Json::array();
    for (EventId id : group.events) events.push_back(id.value());
    slots.push_back(Json{{"slot", group.slot.value()}, {"events", std::move(events)}});
  }
  Json presentation = Json::array();
  for (EventId id : timeline.presentation) presentation.push_back(id.value());
  return Json{{"slots", std::move(slots)},
              {"presentation", std::move(presentation)},
              {"inversions", InversionCount(timeline)}};
}

}  // namespace tieml
