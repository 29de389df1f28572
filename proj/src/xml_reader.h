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

#ifndef TIEML_XML_READER_H_
#define TIEML_XML_READER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tieml::xml {

// 1-based; columns count Unicode code points.
struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Position position, const std::string &detail)
      : std::runtime_error(detail), position_(position) {}

  Position position() const { return position_; }

 private:
  Position position_;
};

struct Attribute {
  std::string name;
  std::string value;
  Position position;
};

enum class EventKind { kStartElement, kEndElement, kText, kComment, kEnd };

struct Event {
  EventKind kind = EventKind::kEnd;
  Position position;
  // Element name for start/end events.
  std::string name;
  std::vector<Attribute> attributes;
  // Text content (decoded) for text and comment events.
  std::string text;
  // False for text produced by a character/entity reference or CDATA. Only
  // literal text is subject to whitespace normalization downstream.
  bool literal = true;
};

// Pull parser for the XML subset used by TIE-ML and TimeML files: elements,
// attributes, text, comments, CDATA, predefined and numeric references. The
// XML declaration, processing instructions and DOCTYPE are skipped.
//
// Several top-level elements are accepted; non-whitespace text outside any
// element is not. Tag balance is checked. Input must be valid UTF-8.
class Reader {
 public:
  explicit Reader(std::string_view input);

  // Next event; kEnd once the input is exhausted. Self-closing elements
  // produce a start and an end event. Throws SyntaxError.
  Event Next();

  int depth() const { return static_cast<int>(open_.size()); }

 private:
  bool AtEnd() const { return pos_ >= input_.size(); }
  char Peek(std::size_t ahead = 0) const;
  bool StartsWith(std::string_view s) const;
  void Advance(std::size_t n = 1);
  void Expect(std::string_view s);
  [[noreturn]] void Fail(const std::string &detail) const;
  [[noreturn]] void FailAt(Position at, const std::string &detail) const;

  void SkipSpace();
  std::string ReadName();
  std::string ReadReference();
  Event ReadText();
  Event ReadTag();
  void SkipUntil(std::string_view terminator, const char *what);
  void SkipDoctype();

  std::string_view input_;
  std::size_t pos_ = 0;
  Position position_;
  std::vector<std::string> open_;
  bool pending_end_ = false;
  std::string pending_name_;
  Position pending_position_;
};

// Validates UTF-8; throws SyntaxError at the first bad byte.
void CheckUtf8(std::string_view input);

// Appends the UTF-8 encoding of a code point.
void AppendUtf8(std::string &out, char32_t code_point);

}  // namespace tieml::xml

#endif  // TIEML_XML_READER_H_
