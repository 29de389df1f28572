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

#include "tieml/conll.h"

#include <charconv>
#include <optional>
#include <vector>

namespace tieml {

namespace {

constexpr std::string_view kAbsent = "_";
constexpr std::string_view kNewDoc = "# newdoc";

std::string Escape(std::string_view text) {
  if (text == kAbsent) return "\\_";
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

template <typename T>
std::string IndexField(const std::optional<T> &value) {
  return value ? std::to_string(value->value()) : std::string(kAbsent);
}

std::string BoolField(const std::optional<bool> &value) {
  return value ? (*value ? "TRUE" : "FALSE") : std::string(kAbsent);
}

class RowReader {
 public:
  explicit RowReader(std::size_t line) : line_(line) {}

  [[noreturn]] void Fail(const std::string &detail) const {
    throw FormatError("line " + std::to_string(line_), detail);
  }

  std::string Unescape(std::string_view field) const {
    if (field == "\\_") return std::string(kAbsent);
    std::string out;
    for (std::size_t i = 0; i < field.size(); ++i) {
      if (field[i] != '\\') {
        out += field[i];
        continue;
      }
      if (++i == field.size()) Fail("dangling escape");
      switch (field[i]) {
        case '\\': out += '\\'; break;
        case 't': out += '\t'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        default: Fail(std::string("unknown escape \\") + field[i]);
      }
    }
    return out;
  }

  std::optional<std::string> OptionalString(std::string_view field) const {
    if (field == kAbsent) return std::nullopt;
    return Unescape(field);
  }

  std::int64_t Integer(std::string_view field, std::string_view column) const {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      Fail(std::string(column) + ": expected an integer, got '" + std::string(field) + "'");
    }
    return value;
  }

  template <typename T>
  std::optional<T> Optional(std::string_view field, std::string_view column) const {
    if (field == kAbsent) return std::nullopt;
    try {
      return T(Integer(field, column));
    } catch (const RangeError &e) {
      Fail(std::string(column) + ": " + e.what());
    }
  }

  std::optional<bool> OptionalBool(std::string_view field, std::string_view column) const {
    if (field == kAbsent) return std::nullopt;
    std::optional<bool> value = ParseBoolean(field);
    if (!value) Fail(std::string(column) + ": expected TRUE, FALSE or _");
    return value;
  }

 private:
  std::size_t line_;
};

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) return fields;
    start = tab + 1;
  }
}

}  // namespace

std::string ToConll(const Corpus &corpus) {
  std::string out = "# global.columns =";
  for (std::string_view column : kConllColumns) {
    out += ' ';
    out += column;
  }
  out += '\n';
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document &document = corpus.documents[d];
    out += kNewDoc;
    if (!document.id.empty()) out += " id = " + Escape(document.id);
    out += '\n';
    for (std::size_t s = 0; s < document.sentences.size(); ++s) {
      const auto &clauses = document.sentences[s].clauses();
      for (std::size_t i = 0; i < clauses.size(); ++i) {
        const Clause &c = clauses[i];
        std::string fields[] = {
            std::to_string(d + 1),
            std::to_string(s + 1),
            std::to_string(i + 1),
            IndexField(c.event_id),
            IndexField(c.time_slot),
            c.tense ? Escape(c.tense->raw()) : std::string(kAbsent),
            BoolField(c.perfect),
            BoolField(c.progressive),
            IndexField(c.e),
            IndexField(c.r),
            IndexField(c.s),
            c.reference ? Escape(*c.reference) : std::string(kAbsent),
            Escape(c.text),
        };
        for (std::size_t f = 0; f < std::size(fields); ++f) {
          if (f > 0) out += '\t';
          out += fields[f];
        }
        out += '\n';
      }
      out += '\n';
    }
  }
  return out;
}

Corpus FromConll(std::string_view text) {
  Corpus corpus;
  std::vector<Clause> sentence;
  std::size_t sentence_number = 0;

  auto flush_sentence = [&]() {
    if (sentence.empty()) return;
    corpus.documents.back().sentences.emplace_back(std::move(sentence));
    sentence.clear();
  };

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    RowReader reader(line_number);

    if (line.empty()) {
      flush_sentence();
      continue;
    }
    if (line.front() == '#') {
      if (line.substr(0, kNewDoc.size()) != kNewDoc) continue;
      std::string_view rest = line.substr(kNewDoc.size());
      if (!rest.empty() && rest.front() != ' ') continue;
      flush_sentence();
      Document document;
      if (!rest.empty()) {
        constexpr std::string_view kId = " id = ";
        if (rest.substr(0, kId.size()) != kId) reader.Fail("expected '# newdoc id = <id>'");
        document.id = reader.Unescape(rest.substr(kId.size()));
      }
      corpus.documents.push_back(std::move(document));
      sentence_number = 0;
      continue;
    }

    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != kConllColumns.size()) {
      reader.Fail("expected " + std::to_string(kConllColumns.size()) + " columns, found " +
                  std::to_string(f.size()));
    }
    std::int64_t doc = reader.Integer(f[0], "DOC");
    std::int64_t sent = reader.Integer(f[1], "SENT");
    std::int64_t clause_index = reader.Integer(f[2], "CLAUSE");
    if (corpus.documents.empty() || doc == static_cast<std::int64_t>(corpus.documents.size()) + 1) {
      if (!sentence.empty()) reader.Fail("DOC changes inside a sentence");
      corpus.documents.emplace_back();
      sentence_number = 0;
    }
    if (doc != static_cast<std::int64_t>(corpus.documents.size())) {
      reader.Fail("DOC " + std::to_string(doc) + " out of sequence");
    }
    if (sentence.empty()) ++sentence_number;
    if (sent != static_cast<std::int64_t>(sentence_number)) {
      reader.Fail("SENT " + std::to_string(sent) + " out of sequence, expected " +
                  std::to_string(sentence_number));
    }
    if (clause_index != static_cast<std::int64_t>(sentence.size()) + 1) {
      reader.Fail("CLAUSE " + std::to_string(clause_index) + " out of sequence");
    }

    Clause c;
    c.event_id = reader.Optional<EventId>(f[3], "EVENTID");
    c.time_slot = reader.Optional<TimeSlot>(f[4], "TIMESLOT");
    if (std::optional<std::string> tense = reader.OptionalString(f[5])) c.tense = TenseLabel(*tense);
    c.perfect = reader.OptionalBool(f[6], "PERFECT");
    c.progressive = reader.OptionalBool(f[7], "PROGRESSIVE");
    c.e = reader.Optional<TimePoint>(f[8], "E");
    c.r = reader.Optional<TimePoint>(f[9], "R");
    c.s = reader.Optional<TimePoint>(f[10], "S");
    c.reference = reader.OptionalString(f[11]);
    c.text = reader.Unescape(f[12]);
    sentence.push_back(std::move(c));
  }
  flush_sentence();
  return corpus;
}

}  // namespace tieml
