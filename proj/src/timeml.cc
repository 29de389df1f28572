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

#include "tieml/timeml.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "tieml/timeline.h"
#include "tieml/validator.h"
#include "xml_reader.h"

namespace tieml {

namespace {

struct RelationName {
  std::string_view name;
  TimeMLRelation relation;
};

constexpr RelationName kRelationNames[] = {
    {"BEFORE", TimeMLRelation::kBefore},
    {"AFTER", TimeMLRelation::kAfter},
    {"IBEFORE", TimeMLRelation::kIBefore},
    {"IAFTER", TimeMLRelation::kIAfter},
    {"INCLUDES", TimeMLRelation::kIncludes},
    {"IS_INCLUDED", TimeMLRelation::kIsIncluded},
    {"DURING", TimeMLRelation::kDuring},
    {"DURING_INV", TimeMLRelation::kDuringInv},
    {"SIMULTANEOUS", TimeMLRelation::kSimultaneous},
    {"IDENTITY", TimeMLRelation::kIdentity},
    {"BEGINS", TimeMLRelation::kBegins},
    {"BEGUN_BY", TimeMLRelation::kBegunBy},
    {"ENDS", TimeMLRelation::kEnds},
    {"ENDED_BY", TimeMLRelation::kEndedBy},
};

// Spellings found in TimeBank-derived corpora and TempEval data.
constexpr RelationName kRelationAliases[] = {
    {"IMMEDIATELY_BEFORE", TimeMLRelation::kIBefore},
    {"IMMEDIATELY_AFTER", TimeMLRelation::kIAfter},
    {"IS-INCLUDED", TimeMLRelation::kIsIncluded},
    {"DURING-INV", TimeMLRelation::kDuringInv},
    {"BEGUN-BY", TimeMLRelation::kBegunBy},
    {"ENDED-BY", TimeMLRelation::kEndedBy},
};

std::string Upper(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string Collapse(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char c : text) {
    if (IsSpace(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

}  // namespace

std::string_view TimeMLRelationName(TimeMLRelation relation) {
  for (const RelationName &entry : kRelationNames) {
    if (entry.relation == relation) return entry.name;
  }
  return "";
}

std::optional<TimeMLRelation> ParseTimeMLRelation(std::string_view name) {
  std::string upper = Upper(name);
  for (const RelationName &entry : kRelationNames) {
    if (entry.name == upper) return entry.relation;
  }
  for (const RelationName &entry : kRelationAliases) {
    if (entry.name == upper) return entry.relation;
  }
  return std::nullopt;
}

void CheckTimeMLDoc(const TimeMLDoc &doc) {
  std::set<std::string> ids;
  for (const TimeMLEvent &event : doc.events) {
    if (!ids.insert(event.eid).second) throw ConversionError("duplicate TimeML id " + event.eid);
  }
  for (const TimeMLTimex &timex : doc.timexes) {
    if (!ids.insert(timex.tid).second) throw ConversionError("duplicate TimeML id " + timex.tid);
  }
  for (const TimeMLLink &link : doc.tlinks) {
    for (const std::string *end : {&link.from, &link.to}) {
      if (!ids.count(*end)) {
        throw ConversionError("TLINK " + link.from + " " + link.rel_type + " " + link.to +
                              ": unknown endpoint " + *end);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Export.

TimeMLDoc ToTimeML(const Document &document) {
  Timeline timeline;
  try {
    timeline = BuildTimeline(document);
  } catch (const TimelineError &e) {
    throw ConversionError(e.what());
  }

  TimeMLDoc doc;
  doc.id = document.id;
  auto eid = [](EventId id) { return "e" + std::to_string(id.value()); };

  std::vector<TimeMLLink> anchors;
  for (const Clause *clause : document.Clauses()) {
    if (clause->event_id) {
      TimeMLEvent event;
      event.eid = eid(*clause->event_id);
      event.text = clause->text;
      if (clause->tense && clause->tense->closed()) {
        static constexpr std::string_view kTenses[] = {"PAST", "PRESENT", "FUTURE"};
        event.tense = std::string(kTenses[static_cast<int>(*clause->tense->closed())]);
      }
      if (clause->perfect || clause->progressive) {
        AspectFlags flags = EffectiveFlags(*clause);
        event.aspect = flags.perfect && flags.progressive ? "PERFECTIVE_PROGRESSIVE"
                       : flags.perfect                    ? "PERFECTIVE"
                       : flags.progressive                ? "PROGRESSIVE"
                                                          : "NONE";
      }
      doc.events.push_back(std::move(event));
    }
    if (clause->reference) {
      std::string tid = "t" + std::to_string(doc.timexes.size() + 1);
      doc.timexes.push_back({tid, *clause->reference, std::nullopt});
      if (clause->event_id) anchors.push_back({eid(*clause->event_id), tid, "IS_INCLUDED"});
    }
  }

  for (std::size_t g = 0; g < timeline.slots.size(); ++g) {
    const std::set<EventId> &group = timeline.slots[g].events;
    for (auto a = group.begin(); a != group.end(); ++a) {
      for (auto b = std::next(a); b != group.end(); ++b) {
        doc.tlinks.push_back({eid(*a), eid(*b), "SIMULTANEOUS"});
      }
    }
    if (g + 1 == timeline.slots.size()) continue;
    for (EventId a : group) {
      for (EventId b : timeline.slots[g + 1].events) doc.tlinks.push_back({eid(a), eid(b), "BEFORE"});
    }
  }
  doc.tlinks.insert(doc.tlinks.end(), anchors.begin(), anchors.end());
  return doc;
}

std::vector<TimeMLDoc> ToTimeML(const Corpus &corpus) {
  std::vector<Diagnostic> diagnostics = Validate(corpus);
  for (const Diagnostic &d : diagnostics) {
    if (d.severity == Severity::kError) {
      throw ConversionError("corpus has validation errors, first: " + FormatDiagnostic(d, "corpus"));
    }
  }
  std::vector<TimeMLDoc> out;
  for (const Document &document : corpus.documents) out.push_back(ToTimeML(document));
  return out;
}

// ---------------------------------------------------------------------------
// Import.

std::size_t LossReport::Count(std::string_view kind) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const LossEntry &e) { return e.kind == kind; }));
}

nlohmann::ordered_json LossReport::ToJsonValue() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const LossEntry &e : entries) {
    list.push_back({{"document", e.document}, {"kind", e.kind}, {"detail", e.detail}});
  }
  return {{"entries", std::move(list)}};
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // The smaller index becomes the root so that groups are represented by
  // their first event in document order.
  void Merge(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::optional<Tense> TenseFromTimeML(std::string_view value) {
  std::string upper = Upper(value);
  if (upper == "PAST") return Tense::kPast;
  if (upper == "PRESENT") return Tense::kPresent;
  if (upper == "FUTURE") return Tense::kFuture;
  return std::nullopt;
}

struct Edge {
  std::size_t from;
  std::size_t to;
};

class DocumentImporter {
 public:
  DocumentImporter(const TimeMLDoc &doc, LossReport &loss) : doc_(doc), loss_(loss) {}

  Document Run() {
    CheckTimeMLDoc(doc_);
    std::size_t n = doc_.events.size();
    for (std::size_t i = 0; i < n; ++i) event_index_[doc_.events[i].eid] = i;
    for (const TimeMLTimex &timex : doc_.timexes) timex_text_[timex.tid] = timex.text;

    std::vector<Clause> clauses(n);
    for (std::size_t i = 0; i < n; ++i) clauses[i] = ImportEvent(doc_.events[i], i);

    UnionFind groups(n);
    std::vector<Edge> before;
    std::vector<bool> linked(n, false);
    std::set<std::string> anchored_timexes;
    for (const TimeMLLink &link : doc_.tlinks) {
      auto from = event_index_.find(link.from);
      auto to = event_index_.find(link.to);
      bool from_event = from != event_index_.end();
      bool to_event = to != event_index_.end();
      std::optional<TimeMLRelation> relation = link.relation();
      std::string label = link.from + " " + link.rel_type + " " + link.to;

      if (!from_event && !to_event) {
        Loss("timex-link", label + ": links between times are not representable");
        continue;
      }
      if (from_event != to_event) {
        std::size_t event = from_event ? from->second : to->second;
        const std::string &tid = from_event ? link.to : link.from;
        Anchor(clauses[event], tid, label);
        anchored_timexes.insert(tid);
        if (!relation || *relation != TimeMLRelation::kIsIncluded || !from_event) {
          Loss("anchor-relation", label + ": kept as reference anchor, relation type dropped");
        }
        continue;
      }
      if (!relation) {
        Loss("unknown-relation", label + ": unknown relType, treated as unordered");
        continue;
      }
      std::size_t a = from->second;
      std::size_t b = to->second;
      linked[a] = linked[b] = true;
      switch (*relation) {
        case TimeMLRelation::kBefore:
          before.push_back({a, b});
          break;
        case TimeMLRelation::kAfter:
          before.push_back({b, a});
          break;
        case TimeMLRelation::kIBefore:
          before.push_back({a, b});
          Loss("collapsed-immediacy", label + ": imported as BEFORE");
          break;
        case TimeMLRelation::kIAfter:
          before.push_back({b, a});
          Loss("collapsed-immediacy", label + ": imported as AFTER");
          break;
        case TimeMLRelation::kSimultaneous:
          groups.Merge(a, b);
          break;
        case TimeMLRelation::kIdentity:
          groups.Merge(a, b);
          Loss("collapsed-identity", label + ": imported as a shared timeslot");
          break;
        case TimeMLRelation::kIncludes:
        case TimeMLRelation::kIsIncluded:
        case TimeMLRelation::kDuring:
        case TimeMLRelation::kDuringInv:
          groups.Merge(a, b);
          Loss("collapsed-inclusion", label + ": imported as a shared timeslot");
          break;
        case TimeMLRelation::kBegins:
        case TimeMLRelation::kBegunBy:
        case TimeMLRelation::kEnds:
        case TimeMLRelation::kEndedBy:
          groups.Merge(a, b);
          Loss("collapsed-boundary", label + ": imported as a shared timeslot");
          break;
      }
    }

    for (const TimeMLTimex &timex : doc_.timexes) {
      if (!anchored_timexes.count(timex.tid)) {
        Loss("unanchored-timex", timex.tid + " \"" + timex.text + "\" is not linked to an event");
      }
    }
    for (const std::string &link : doc_.unsupported_links) {
      Loss("unsupported-link", link + " is outside TLINK and was dropped");
    }
    if (doc_.signals > 0) {
      Loss("signal", std::to_string(doc_.signals) + " SIGNAL element(s) dropped");
    }

    std::vector<std::uint32_t> slot = Layer(groups, before, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (linked[i]) clauses[i].time_slot = TimeSlot(slot[groups.Find(i)]);
    }

    Document document;
    document.id = doc_.id;
    if (!clauses.empty()) document.sentences.emplace_back(std::move(clauses));
    return document;
  }

 private:
  void Loss(std::string kind, std::string detail) {
    loss_.entries.push_back({doc_.id, std::move(kind), std::move(detail)});
  }

  Clause ImportEvent(const TimeMLEvent &event, std::size_t index) {
    Clause clause;
    clause.event_id = EventId(static_cast<std::int64_t>(index) + 1);
    clause.text = event.text;
    if (event.tense && Upper(*event.tense) != "NONE") {
      if (std::optional<Tense> tense = TenseFromTimeML(*event.tense)) {
        clause.tense = TenseLabel(*tense);
      } else {
        Loss("tense", event.eid + ": tense " + *event.tense + " has no TIE-ML label");
      }
    }
    if (event.aspect) {
      std::string aspect = Upper(*event.aspect);
      if (aspect == "PERFECTIVE" || aspect == "PERFECTIVE_PROGRESSIVE") clause.perfect = true;
      if (aspect == "PROGRESSIVE" || aspect == "PERFECTIVE_PROGRESSIVE") clause.progressive = true;
      if (aspect != "NONE" && !clause.perfect && !clause.progressive) {
        Loss("aspect", event.eid + ": aspect " + *event.aspect + " has no TIE-ML attribute");
      }
    }
    return clause;
  }

  void Anchor(Clause &clause, const std::string &tid, const std::string &label) {
    const std::string &text = timex_text_.at(tid);
    if (!clause.reference) {
      clause.reference = text;
    } else if (*clause.reference != text) {
      Loss("extra-anchor", label + ": event already anchored to \"" + *clause.reference + "\"");
    }
  }

  // Longest-path layering over merged groups: a group's slot is one more
  // than the highest slot among its before-predecessors.
  std::vector<std::uint32_t> Layer(UnionFind &groups, const std::vector<Edge> &before,
                                   std::size_t n) {
    std::vector<std::vector<std::size_t>> successors(n);
    std::vector<std::vector<std::size_t>> predecessors(n);
    std::vector<std::size_t> indegree(n, 0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const Edge &edge : before) {
      std::size_t a = groups.Find(edge.from);
      std::size_t b = groups.Find(edge.to);
      if (a == b) {
        throw ConversionError("cyclic before-order: " + doc_.events[edge.from].eid + " before " +
                              doc_.events[edge.to].eid + " but both share a timeslot");
      }
      if (!seen.insert({a, b}).second) continue;
      successors[a].push_back(b);
      predecessors[b].push_back(a);
      ++indegree[b];
    }

    std::vector<std::uint32_t> slot(n, 1);
    std::set<std::size_t> ready;
    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (groups.Find(i) != i) continue;
      ++roots;
      if (indegree[i] == 0) ready.insert(i);
    }
    std::size_t done = 0;
    while (!ready.empty()) {
      std::size_t g = *ready.begin();
      ready.erase(ready.begin());
      ++done;
      for (std::size_t next : successors[g]) {
        slot[next] = std::max(slot[next], slot[g] + 1);
        if (--indegree[next] == 0) ready.insert(next);
      }
    }
    if (done != roots) throw ConversionError("cyclic before-order: " + DescribeCycle(groups, predecessors, indegree));
    return slot;
  }

  // Every unfinished group has an unfinished predecessor, so walking
  // predecessors from any of them must revisit a group.
  std::string DescribeCycle(UnionFind &groups, const std::vector<std::vector<std::size_t>> &predecessors,
                            const std::vector<std::size_t> &indegree) {
    std::size_t start = 0;
    while (groups.Find(start) != start || indegree[start] == 0) ++start;
    std::vector<std::size_t> path;
    std::map<std::size_t, std::size_t> position;
    std::size_t g = start;
    while (!position.count(g)) {
      position[g] = path.size();
      path.push_back(g);
      for (std::size_t p : predecessors[g]) {
        if (indegree[p] > 0) {
          g = p;
          break;
        }
      }
    }
    std::vector<std::size_t> cycle(path.begin() + static_cast<std::ptrdiff_t>(position[g]), path.end());
    std::reverse(cycle.begin(), cycle.end());
    // Start at the earliest event so the message does not depend on the walk.
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    std::string text;
    for (std::size_t member : cycle) text += doc_.events[member].eid + " -> ";
    return text + doc_.events[cycle.front()].eid;
  }

  const TimeMLDoc &doc_;
  LossReport &loss_;
  std::map<std::string, std::size_t> event_index_;
  std::map<std::string, std::string> timex_text_;
};

}  // namespace

TimeMLImport FromTimeML(std::span<const TimeMLDoc> docs) {
  TimeMLImport result;
  for (const TimeMLDoc &doc : docs) {
    result.corpus.documents.push_back(DocumentImporter(doc, result.loss).Run());
  }
  return result;
}

// ---------------------------------------------------------------------------
// XML.

namespace {

void AppendEscaped(std::string &out, std::string_view text, bool attribute) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        out += attribute ? "&quot;" : "\"";
        break;
      case '\t':
      case '\n':
      case '\r':
        if (attribute) {
          out += "&#" + std::to_string(static_cast<int>(c)) + ";";
        } else {
          out += c;
        }
        break;
      default: out += c;
    }
  }
}

void AppendAttribute(std::string &out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  AppendEscaped(out, value, true);
  out += '"';
}

void WriteDoc(std::string &out, const TimeMLDoc &doc) {
  out += "<TimeML>\n";
  if (!doc.id.empty()) {
    out += "<DOCID>";
    AppendEscaped(out, doc.id, false);
    out += "</DOCID>\n";
  }
  out += "<TEXT>\n";
  for (const TimeMLEvent &event : doc.events) {
    out += "<EVENT";
    AppendAttribute(out, "eid", event.eid);
    AppendAttribute(out, "class", "OCCURRENCE");
    out += '>';
    AppendEscaped(out, event.text, false);
    out += "</EVENT>\n";
  }
  for (const TimeMLTimex &timex : doc.timexes) {
    out += "<TIMEX3";
    AppendAttribute(out, "tid", timex.tid);
    AppendAttribute(out, "type", "DATE");
    if (timex.value) AppendAttribute(out, "value", *timex.value);
    out += '>';
    AppendEscaped(out, timex.text, false);
    out += "</TIMEX3>\n";
  }
  out += "</TEXT>\n";

  std::map<std::string, std::string> instance;
  for (std::size_t i = 0; i < doc.events.size(); ++i) {
    const TimeMLEvent &event = doc.events[i];
    std::string eiid = "ei" + std::to_string(i + 1);
    instance[event.eid] = eiid;
    out += "<MAKEINSTANCE";
    AppendAttribute(out, "eiid", eiid);
    AppendAttribute(out, "eventID", event.eid);
    if (event.tense) AppendAttribute(out, "tense", *event.tense);
    if (event.aspect) AppendAttribute(out, "aspect", *event.aspect);
    out += "/>\n";
  }
  for (std::size_t i = 0; i < doc.tlinks.size(); ++i) {
    const TimeMLLink &link = doc.tlinks[i];
    out += "<TLINK";
    AppendAttribute(out, "lid", "l" + std::to_string(i + 1));
    auto from = instance.find(link.from);
    if (from != instance.end()) {
      AppendAttribute(out, "eventInstanceID", from->second);
    } else {
      AppendAttribute(out, "timeID", link.from);
    }
    auto to = instance.find(link.to);
    if (to != instance.end()) {
      AppendAttribute(out, "relatedToEventInstance", to->second);
    } else {
      AppendAttribute(out, "relatedToTime", link.to);
    }
    AppendAttribute(out, "relType", link.rel_type);
    out += "/>\n";
  }
  out += "</TimeML>\n";
}

class TimeMLReader {
 public:
  explicit TimeMLReader(std::string_view xml) : reader_(Start(xml)) {}

  std::vector<TimeMLDoc> Run() {
    std::vector<TimeMLDoc> docs;
    bool seen_root = false;
    while (true) {
      xml::Event event = Next();
      if (event.kind == xml::EventKind::kEnd) break;
      if (event.kind != xml::EventKind::kStartElement) continue;
      if (seen_root) Fail(event.position, "content after the root element");
      seen_root = true;
      if (event.name == "TimeML") {
        docs.push_back(ReadDoc());
      } else if (event.name == "TimeMLCollection") {
        while (true) {
          xml::Event child = Next();
          if (child.kind == xml::EventKind::kEndElement) break;
          if (child.kind != xml::EventKind::kStartElement) continue;
          if (child.name != "TimeML") Fail(child.position, "expected <TimeML>, found <" + child.name + ">");
          docs.push_back(ReadDoc());
        }
      } else {
        Fail(event.position, "expected <TimeML> or <TimeMLCollection>, found <" + event.name + ">");
      }
    }
    if (!seen_root) Fail({1, 1}, "no <TimeML> element");
    return docs;
  }

 private:
  struct Instance {
    std::string eid;
    std::optional<std::string> tense;
    std::optional<std::string> aspect;
  };

  static xml::Reader Start(std::string_view xml) {
    try {
      return xml::Reader(xml);
    } catch (const xml::SyntaxError &e) {
      Fail(e.position(), e.what());
    }
  }

  [[noreturn]] static void Fail(xml::Position at, const std::string &detail) {
    throw ConversionError(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + detail);
  }

  xml::Event Next() {
    try {
      return reader_.Next();
    } catch (const xml::SyntaxError &e) {
      Fail(e.position(), e.what());
    }
  }

  static std::optional<std::string> Attr(const xml::Event &element, std::string_view name) {
    for (const xml::Attribute &a : element.attributes) {
      if (a.name == name) return a.value;
    }
    return std::nullopt;
  }

  static std::string Required(const xml::Event &element, std::string_view name) {
    std::optional<std::string> value = Attr(element, name);
    if (!value) Fail(element.position, "<" + element.name + "> needs a " + std::string(name) + " attribute");
    return *value;
  }

  // Concatenated text of the current element, nested markup included.
  std::string ReadText() {
    std::string text;
    int depth = 1;
    while (depth > 0) {
      xml::Event event = Next();
      if (event.kind == xml::EventKind::kStartElement) ++depth;
      if (event.kind == xml::EventKind::kEndElement) --depth;
      if (event.kind == xml::EventKind::kText) text += event.text;
    }
    return Collapse(text);
  }

  TimeMLDoc ReadDoc() {
    TimeMLDoc doc;
    std::map<std::string, Instance> instances;
    struct PendingLink {
      TimeMLLink link;
      xml::Position position;
    };
    std::vector<PendingLink> links;

    int depth = 1;
    while (depth > 0) {
      xml::Event event = Next();
      if (event.kind == xml::EventKind::kEndElement) {
        --depth;
        continue;
      }
      if (event.kind != xml::EventKind::kStartElement) continue;
      const std::string &name = event.name;
      if (name == "DOCID") {
        doc.id = ReadText();
      } else if (name == "EVENT") {
        TimeMLEvent e;
        e.eid = Required(event, "eid");
        e.tense = Attr(event, "tense");
        e.aspect = Attr(event, "aspect");
        e.text = ReadText();
        doc.events.push_back(std::move(e));
      } else if (name == "TIMEX3") {
        TimeMLTimex t;
        t.tid = Required(event, "tid");
        t.value = Attr(event, "value");
        t.text = ReadText();
        doc.timexes.push_back(std::move(t));
      } else if (name == "SIGNAL") {
        ++doc.signals;
        ReadText();
      } else if (name == "MAKEINSTANCE") {
        instances[Required(event, "eiid")] = {Required(event, "eventID"), Attr(event, "tense"),
                                              Attr(event, "aspect")};
        ReadText();
      } else if (name == "TLINK") {
        TimeMLLink link;
        std::optional<std::string> from = Attr(event, "eventInstanceID");
        if (!from) from = Attr(event, "timeID");
        std::optional<std::string> to = Attr(event, "relatedToEventInstance");
        if (!to) to = Attr(event, "relatedToTime");
        if (!from || !to) Fail(event.position, "<TLINK> needs a source and a target");
        link.from = *from;
        link.to = *to;
        link.rel_type = Required(event, "relType");
        links.push_back({std::move(link), event.position});
        ReadText();
      } else if (name == "SLINK" || name == "ALINK") {
        doc.unsupported_links.push_back(name + " " + Attr(event, "lid").value_or("(no lid)"));
        ReadText();
      } else {
        ++depth;
      }
    }

    std::map<std::string, std::size_t> by_eid;
    for (std::size_t i = 0; i < doc.events.size(); ++i) by_eid.emplace(doc.events[i].eid, i);
    for (const auto &[eiid, instance] : instances) {
      auto it = by_eid.find(instance.eid);
      if (it == by_eid.end()) continue;
      TimeMLEvent &event = doc.events[it->second];
      if (!event.tense) event.tense = instance.tense;
      if (!event.aspect) event.aspect = instance.aspect;
    }
    for (PendingLink &pending : links) {
      for (std::string *end : {&pending.link.from, &pending.link.to}) {
        auto it = instances.find(*end);
        if (it != instances.end()) *end = it->second.eid;
      }
      doc.tlinks.push_back(std::move(pending.link));
    }
    try {
      CheckTimeMLDoc(doc);
    } catch (const ConversionError &e) {
      Fail(links.empty() ? xml::Position{} : links.front().position, e.what());
    }
    return doc;
  }

  xml::Reader reader_;
};

}  // namespace

std::string WriteTimeML(std::span<const TimeMLDoc> docs) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (docs.size() == 1) {
    WriteDoc(out, docs.front());
    return out;
  }
  out += "<TimeMLCollection>\n";
  for (const TimeMLDoc &doc : docs) WriteDoc(out, doc);
  out += "</TimeMLCollection>\n";
  return out;
}

std::vector<TimeMLDoc> ReadTimeML(std::string_view xml) { return TimeMLReader(xml).Run(); }

}  // namespace tieml
