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

#include "tieml/tieml_io.h"

#include <charconv>
#include <optional>

#include "xml_reader.h"

namespace tieml {

std::string_view ParseErrorKindName(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedXml: return "malformed XML";
    case ParseErrorKind::kUnknownAttribute: return "unknown attribute";
    case ParseErrorKind::kBadAttributeValue: return "bad attribute value";
    case ParseErrorKind::kStructureViolation: return "structure violation";
  }
  return "";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       std::string detail)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(ParseErrorKindName(kind)) + ": " + detail),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(std::move(detail)) {}

namespace {

bool IsXmlSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsBlank(std::string_view text) {
  for (char c : text) {
    if (!IsXmlSpace(c)) return false;
  }
  return true;
}

std::optional<std::int64_t> ParseInteger(std::string_view text) {
  std::int64_t value = 0;
  const char *begin = text.data();
  const char *end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Text content of a clause: literal pieces are whitespace-normalized,
// pieces from references or CDATA are kept as is.
class ClauseText {
 public:
  void Append(std::string_view text, bool literal) {
    if (!pieces_.empty() && pieces_.back().literal == literal) {
      pieces_.back().text += text;
    } else {
      pieces_.push_back({std::string(text), literal});
    }
  }

  std::string Raw() const {
    std::string out;
    for (const Piece &piece : pieces_) out += piece.text;
    return out;
  }

  // Trims and collapses runs of literal whitespace to single spaces.
  std::string Normalized() const {
    std::string out;
    bool pending_space = false;
    for (const Piece &piece : pieces_) {
      for (char c : piece.text) {
        if (piece.literal && IsXmlSpace(c)) {
          pending_space = !out.empty();
          continue;
        }
        if (pending_space) out += ' ';
        pending_space = false;
        out += c;
      }
    }
    return out;
  }

 private:
  struct Piece {
    std::string text;
    bool literal;
  };
  std::vector<Piece> pieces_;
};

class Parser {
 public:
  Parser(std::string_view input, const ParseOptions &options)
      : reader_(Start(input)), options_(options) {}

  ParseResult Run() {
    std::vector<Sentence> bare;
    bool seen_root = false;
    while (true) {
      xml::Event event = Next();
      if (event.kind == xml::EventKind::kEnd) break;
      if (event.kind != xml::EventKind::kStartElement) continue;
      if (seen_root) Fail(ParseErrorKind::kMalformedXml, event.position, "content after the <tieml> root element");
      if (event.name == "tieml") {
        if (!bare.empty()) {
          Fail(ParseErrorKind::kMalformedXml, event.position, "<tieml> must be the only root element");
        }
        RejectAttributes(event);
        ParseRoot();
        seen_root = true;
      } else if (event.name == "s") {
        bare.push_back(ParseSentence(event));
      } else {
        RejectElement(event);
      }
    }
    if (!bare.empty()) result_.corpus.documents.push_back(Document{"", std::move(bare)});
    return std::move(result_);
  }

 private:
  static xml::Reader Start(std::string_view input) {
    try {
      return xml::Reader(input);
    } catch (const xml::SyntaxError &e) {
      throw ParseError(ParseErrorKind::kMalformedXml, e.position().line, e.position().column, e.what());
    }
  }

  xml::Event Next() {
    try {
      return reader_.Next();
    } catch (const xml::SyntaxError &e) {
      throw ParseError(ParseErrorKind::kMalformedXml, e.position().line, e.position().column, e.what());
    }
  }

  [[noreturn]] static void Fail(ParseErrorKind kind, xml::Position at, std::string detail) {
    throw ParseError(kind, at.line, at.column, std::move(detail));
  }

  void Unknown(const xml::Attribute &attribute, const std::string &element) {
    std::string detail = "attribute '" + attribute.name + "' is not allowed on <" + element + ">";
    if (!options_.lenient) Fail(ParseErrorKind::kUnknownAttribute, attribute.position, detail);
    result_.warnings.push_back({ParseErrorKind::kUnknownAttribute, attribute.position.line,
                                attribute.position.column, detail});
  }

  void RejectAttributes(const xml::Event &element) {
    for (const xml::Attribute &attribute : element.attributes) Unknown(attribute, element.name);
  }

  [[noreturn]] static void RejectElement(const xml::Event &element) {
    if (element.name == "c") {
      Fail(ParseErrorKind::kStructureViolation, element.position, "<c> outside <s>");
    }
    if (element.name == "doc") {
      Fail(ParseErrorKind::kStructureViolation, element.position, "<doc> outside <tieml>");
    }
    Fail(ParseErrorKind::kStructureViolation, element.position, "unexpected element <" + element.name + ">");
  }

  void ParseRoot() {
    std::vector<Sentence> sentences;
    bool has_docs = false;
    while (true) {
      xml::Event event = Next();
      switch (event.kind) {
        case xml::EventKind::kEndElement:
          if (!sentences.empty()) {
            result_.corpus.documents.push_back(Document{"", std::move(sentences)});
          }
          return;
        case xml::EventKind::kText:
          if (!event.literal || !IsBlank(event.text)) {
            Fail(ParseErrorKind::kStructureViolation, event.position, "text directly inside <tieml>");
          }
          break;
        case xml::EventKind::kStartElement:
          if (event.name == "doc") {
            if (!sentences.empty()) {
              Fail(ParseErrorKind::kStructureViolation, event.position, "<doc> mixed with bare <s> in <tieml>");
            }
            has_docs = true;
            ParseDocument(event);
          } else if (event.name == "s") {
            if (has_docs) {
              Fail(ParseErrorKind::kStructureViolation, event.position, "<s> mixed with <doc> in <tieml>");
            }
            sentences.push_back(ParseSentence(event));
          } else {
            RejectElement(event);
          }
          break;
        default:
          break;
      }
    }
  }

  void ParseDocument(const xml::Event &start) {
    Document document;
    for (const xml::Attribute &attribute : start.attributes) {
      if (attribute.name == "id") {
        document.id = attribute.value;
      } else {
        Unknown(attribute, start.name);
      }
    }
    while (true) {
      xml::Event event = Next();
      if (event.kind == xml::EventKind::kEndElement) break;
      if (event.kind == xml::EventKind::kText && (!event.literal || !IsBlank(event.text))) {
        Fail(ParseErrorKind::kStructureViolation, event.position, "text directly inside <doc>");
      }
      if (event.kind != xml::EventKind::kStartElement) continue;
      if (event.name != "s") {
        if (event.name == "c") RejectElement(event);
        Fail(ParseErrorKind::kStructureViolation, event.position, "unexpected element <" + event.name + "> in <doc>");
      }
      document.sentences.push_back(ParseSentence(event));
    }
    result_.corpus.documents.push_back(std::move(document));
  }

  Sentence ParseSentence(const xml::Event &start) {
    RejectAttributes(start);
    std::vector<Clause> clauses;
    while (true) {
      xml::Event event = Next();
      if (event.kind == xml::EventKind::kEndElement) break;
      if (event.kind != xml::EventKind::kStartElement) continue;
      if (event.name != "c") {
        Fail(ParseErrorKind::kStructureViolation, event.position, "unexpected element <" + event.name + "> in <s>");
      }
      clauses.push_back(ParseClause(event));
    }
    if (clauses.empty()) {
      Fail(ParseErrorKind::kStructureViolation, start.position, "<s> without any <c> clause");
    }
    return Sentence(std::move(clauses));
  }

  template <typename T>
  static T Checked(const xml::Attribute &attribute, const char *expected) {
    std::optional<std::int64_t> value = ParseInteger(attribute.value);
    try {
      if (value) return T(*value);
    } catch (const RangeError &) {
    }
    Fail(ParseErrorKind::kBadAttributeValue, attribute.position,
         attribute.name + "=\"" + attribute.value + "\": expected " + expected);
  }

  Clause ParseClause(const xml::Event &start) {
    Clause clause;
    for (const xml::Attribute &a : start.attributes) {
      const std::string &name = a.name;
      if (name == "eventid") {
        clause.event_id = Checked<EventId>(a, "a positive integer");
      } else if (name == "timeslot") {
        clause.time_slot = Checked<TimeSlot>(a, "a positive integer");
      } else if (name == "tense") {
        clause.tense = TenseLabel(a.value);
      } else if (name == "perfect" || name == "progressive") {
        std::optional<bool> flag = ParseBoolean(a.value);
        if (!flag) {
          Fail(ParseErrorKind::kBadAttributeValue, a.position, name + "=\"" + a.value + "\": expected TRUE or FALSE");
        }
        (name == "perfect" ? clause.perfect : clause.progressive) = *flag;
      } else if (name == "E") {
        clause.e = Checked<TimePoint>(a, "an integer in [-2, 2]");
      } else if (name == "R") {
        clause.r = Checked<TimePoint>(a, "an integer in [-2, 2]");
      } else if (name == "S") {
        clause.s = Checked<TimePoint>(a, "an integer in [-2, 2]");
      } else if (name == "reference") {
        clause.reference = a.value;
      } else {
        Unknown(a, start.name);
      }
    }

    ClauseText text;
    while (true) {
      xml::Event event = Next();
      if (event.kind == xml::EventKind::kEndElement) break;
      if (event.kind == xml::EventKind::kStartElement) {
        Fail(ParseErrorKind::kStructureViolation, event.position, "element <" + event.name + "> nested in <c>");
      }
      if (event.kind == xml::EventKind::kText) text.Append(event.text, event.literal);
    }
    clause.text = options_.raw_text ? text.Raw() : text.Normalized();
    return clause;
  }

  xml::Reader reader_;
  const ParseOptions &options_;
  ParseResult result_;
};

void AppendAttributeValue(std::string &out, std::string_view value) {
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
}

// Literal whitespace is only emitted where the reader's normalization keeps
// it unchanged: a single space between two non-space characters. All other
// whitespace goes out as character references, which the reader preserves.
void AppendClauseText(std::string &out, std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (IsXmlSpace(c)) {
      bool inner = c == ' ' && i > 0 && i + 1 < text.size() && !IsXmlSpace(text[i - 1]) &&
                   !IsXmlSpace(text[i + 1]);
      if (inner) {
        out += ' ';
      } else {
        out += "&#" + std::to_string(static_cast<int>(c)) + ";";
      }
      continue;
    }
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
}

void AppendAttribute(std::string &out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  AppendAttributeValue(out, value);
  out += '"';
}

void AppendSentence(std::string &out, const Sentence &sentence, std::string_view indent) {
  out += indent;
  out += "<s>\n";
  for (const Clause &c : sentence.clauses()) {
    out += indent;
    out += "  <c";
    if (c.event_id) AppendAttribute(out, "eventid", std::to_string(c.event_id->value()));
    if (c.time_slot) AppendAttribute(out, "timeslot", std::to_string(c.time_slot->value()));
    if (c.tense) AppendAttribute(out, "tense", c.tense->raw());
    if (c.perfect) AppendAttribute(out, "perfect", *c.perfect ? "TRUE" : "FALSE");
    if (c.progressive) AppendAttribute(out, "progressive", *c.progressive ? "TRUE" : "FALSE");
    if (c.e) AppendAttribute(out, "E", std::to_string(c.e->value()));
    if (c.r) AppendAttribute(out, "R", std::to_string(c.r->value()));
    if (c.s) AppendAttribute(out, "S", std::to_string(c.s->value()));
    if (c.reference) AppendAttribute(out, "reference", *c.reference);
    out += '>';
    AppendClauseText(out, c.text);
    out += "</c>\n";
  }
  out += indent;
  out += "</s>\n";
}

}  // namespace

ParseResult Parse(std::string_view input, const ParseOptions &options) {
  return Parser(input, options).Run();
}

std::string Serialize(const Corpus &corpus) {
  std::string out = "<tieml>\n";
  const auto &documents = corpus.documents;
  bool bare = documents.size() == 1 && documents[0].id.empty() && !documents[0].sentences.empty();
  for (const Document &document : documents) {
    if (bare) {
      for (const Sentence &sentence : document.sentences) AppendSentence(out, sentence, "");
      continue;
    }
    out += "<doc";
    AppendAttribute(out, "id", document.id);
    out += ">\n";
    for (const Sentence &sentence : document.sentences) AppendSentence(out, sentence, "  ");
    out += "</doc>\n";
  }
  out += "</tieml>\n";
  return out;
}

}  // namespace tieml
