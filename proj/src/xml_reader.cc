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

#include "xml_reader.h"

#include <charconv>

namespace tieml::xml {

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsNameStart(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' || u >= 0x80;
}

bool IsNameChar(char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

void AppendUtf8(std::string &out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

void CheckUtf8(std::string_view input) {
  Position at;
  std::size_t i = 0;
  while (i < input.size()) {
    unsigned char c = static_cast<unsigned char>(input[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      throw SyntaxError(at, "invalid UTF-8 lead byte");
    }
    if (i + len > input.size()) throw SyntaxError(at, "truncated UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(input[i + k]);
      if (!IsContinuation(cc)) throw SyntaxError(at, "invalid UTF-8 continuation byte");
      cp = (cp << 6) | (cc & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw SyntaxError(at, "invalid UTF-8 code point");
    }
    if (c == '\n') {
      ++at.line;
      at.column = 1;
    } else {
      ++at.column;
    }
    i += len;
  }
}

Reader::Reader(std::string_view input) : input_(input) {
  CheckUtf8(input_);
  if (StartsWith("\xEF\xBB\xBF")) Advance(3);
}

char Reader::Peek(std::size_t ahead) const {
  return pos_ + ahead < input_.size() ? input_[pos_ + ahead] : '\0';
}

bool Reader::StartsWith(std::string_view s) const {
  return input_.substr(pos_, s.size()) == s;
}

void Reader::Advance(std::size_t n) {
  for (std::size_t i = 0; i < n && pos_ < input_.size(); ++i, ++pos_) {
    unsigned char c = static_cast<unsigned char>(input_[pos_]);
    if (c == '\n') {
      ++position_.line;
      position_.column = 1;
    } else if (!IsContinuation(c)) {
      ++position_.column;
    }
  }
}

void Reader::Expect(std::string_view s) {
  if (!StartsWith(s)) Fail("expected '" + std::string(s) + "'");
  Advance(s.size());
}

void Reader::Fail(const std::string &detail) const { throw SyntaxError(position_, detail); }

void Reader::FailAt(Position at, const std::string &detail) const {
  throw SyntaxError(at, detail);
}

void Reader::SkipSpace() {
  while (!AtEnd() && IsSpace(Peek())) Advance();
}

std::string Reader::ReadName() {
  if (AtEnd() || !IsNameStart(Peek())) Fail("expected a name");
  std::size_t start = pos_;
  while (!AtEnd() && IsNameChar(Peek())) Advance();
  return std::string(input_.substr(start, pos_ - start));
}

std::string Reader::ReadReference() {
  Position at = position_;
  Advance();  // '&'
  std::size_t end = input_.find(';', pos_);
  if (end == std::string_view::npos || end - pos_ > 16) FailAt(at, "unterminated reference");
  std::string_view body = input_.substr(pos_, end - pos_);
  std::string out;
  if (body == "lt") {
    out = "<";
  } else if (body == "gt") {
    out = ">";
  } else if (body == "amp") {
    out = "&";
  } else if (body == "quot") {
    out = "\"";
  } else if (body == "apos") {
    out = "'";
  } else if (body.size() > 1 && body[0] == '#') {
    bool hex = body[1] == 'x';
    std::string_view digits = body.substr(hex ? 2 : 1);
    std::uint32_t cp = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, hex ? 16 : 10);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
        cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      FailAt(at, "bad character reference '&" + std::string(body) + ";'");
    }
    AppendUtf8(out, static_cast<char32_t>(cp));
  } else {
    FailAt(at, "unknown entity '&" + std::string(body) + ";'");
  }
  Advance(body.size() + 1);
  return out;
}

void Reader::SkipUntil(std::string_view terminator, const char *what) {
  Position at = position_;
  std::size_t end = input_.find(terminator, pos_);
  if (end == std::string_view::npos) FailAt(at, std::string("unterminated ") + what);
  Advance(end + terminator.size() - pos_);
}

void Reader::SkipDoctype() {
  Position at = position_;
  int brackets = 0;
  while (!AtEnd()) {
    char c = Peek();
    Advance();
    if (c == '[') {
      ++brackets;
    } else if (c == ']') {
      --brackets;
    } else if (c == '>' && brackets <= 0) {
      return;
    }
  }
  FailAt(at, "unterminated DOCTYPE");
}

Event Reader::ReadText() {
  Event event;
  event.kind = EventKind::kText;
  event.position = position_;
  if (Peek() == '&') {
    event.literal = false;
    event.text = ReadReference();
  } else {
    std::size_t start = pos_;
    while (!AtEnd() && Peek() != '<' && Peek() != '&') Advance();
    event.text.assign(input_.substr(start, pos_ - start));
  }
  if (open_.empty()) {
    bool blank = event.literal;
    for (char c : event.text) blank = blank && IsSpace(c);
    if (!blank) FailAt(event.position, "text outside the root element");
  }
  return event;
}

Event Reader::ReadTag() {
  Event event;
  event.position = position_;
  Advance();  // '<'
  if (Peek() == '/') {
    Advance();
    event.kind = EventKind::kEndElement;
    event.name = ReadName();
    SkipSpace();
    Expect(">");
    if (open_.empty()) FailAt(event.position, "unexpected closing tag </" + event.name + ">");
    if (open_.back() != event.name) {
      FailAt(event.position,
             "closing tag </" + event.name + "> does not match <" + open_.back() + ">");
    }
    open_.pop_back();
    return event;
  }

  event.kind = EventKind::kStartElement;
  event.name = ReadName();
  while (true) {
    bool had_space = !AtEnd() && IsSpace(Peek());
    SkipSpace();
    if (AtEnd()) Fail("unterminated tag <" + event.name + ">");
    if (Peek() == '>') {
      Advance();
      open_.push_back(event.name);
      return event;
    }
    if (StartsWith("/>")) {
      Advance(2);
      pending_end_ = true;
      pending_name_ = event.name;
      pending_position_ = event.position;
      return event;
    }
    if (!had_space) Fail("expected whitespace before attribute");
    Attribute attribute;
    attribute.position = position_;
    attribute.name = ReadName();
    for (const Attribute &other : event.attributes) {
      if (other.name == attribute.name) {
        FailAt(attribute.position, "duplicate attribute '" + attribute.name + "'");
      }
    }
    SkipSpace();
    Expect("=");
    SkipSpace();
    char quote = Peek();
    if (quote != '"' && quote != '\'') Fail("expected quoted attribute value");
    Advance();
    while (true) {
      if (AtEnd()) FailAt(attribute.position, "unterminated attribute value");
      char c = Peek();
      if (c == quote) break;
      if (c == '<') Fail("'<' in attribute value");
      if (c == '&') {
        attribute.value += ReadReference();
      } else {
        attribute.value += IsSpace(c) ? ' ' : c;
        Advance();
      }
    }
    Advance();
    event.attributes.push_back(std::move(attribute));
  }
}

Event Reader::Next() {
  if (pending_end_) {
    pending_end_ = false;
    Event event;
    event.kind = EventKind::kEndElement;
    event.name = pending_name_;
    event.position = pending_position_;
    return event;
  }
  while (true) {
    if (AtEnd()) {
      if (!open_.empty()) Fail("unclosed element <" + open_.back() + ">");
      Event event;
      event.position = position_;
      return event;
    }
    if (Peek() != '<') return ReadText();
    if (StartsWith("<!--")) {
      Event event;
      event.kind = EventKind::kComment;
      event.position = position_;
      Advance(4);
      std::size_t end = input_.find("-->", pos_);
      if (end == std::string_view::npos) FailAt(event.position, "unterminated comment");
      event.text.assign(input_.substr(pos_, end - pos_));
      Advance(end + 3 - pos_);
      return event;
    }
    if (StartsWith("<![CDATA[")) {
      Event event;
      event.kind = EventKind::kText;
      event.literal = false;
      event.position = position_;
      if (open_.empty()) Fail("CDATA outside the root element");
      Advance(9);
      std::size_t end = input_.find("]]>", pos_);
      if (end == std::string_view::npos) FailAt(event.position, "unterminated CDATA section");
      event.text.assign(input_.substr(pos_, end - pos_));
      Advance(end + 3 - pos_);
      return event;
    }
    if (StartsWith("<?")) {
      SkipUntil("?>", "processing instruction");
      continue;
    }
    if (StartsWith("<!DOCTYPE")) {
      SkipDoctype();
      continue;
    }
    if (StartsWith("<!")) Fail("unsupported markup declaration");
    return ReadTag();
  }
}

}  // namespace tieml::xml
