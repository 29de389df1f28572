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

#ifndef TIEML_TIEML_IO_H_
#define TIEML_TIEML_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tieml/model.h"

namespace tieml {

enum class ParseErrorKind {
  kMalformedXml,
  kUnknownAttribute,
  kBadAttributeValue,
  kStructureViolation,
};

std::string_view ParseErrorKindName(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string detail);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string &detail() const { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

struct ParseOptions {
  // Report unknown attributes as warnings instead of failing.
  bool lenient = false;
  // Keep clause text exactly as written (minus comments) instead of
  // trimming it and collapsing whitespace runs.
  bool raw_text = false;
};

// A non-fatal finding from a lenient parse.
struct ParseWarning {
  ParseErrorKind kind;
  std::size_t line;
  std::size_t column;
  std::string detail;
};

struct ParseResult {
  Corpus corpus;
  std::vector<ParseWarning> warnings;
};

// Reads TIE-ML XML. Accepted layouts:
//   <s>...</s> <s>...</s>                  bare sentences, one document
//   <tieml><s>...</s>...</tieml>           one document
//   <tieml><doc id="a"><s>...</s></doc>...</tieml>
// Comments are dropped; text between clauses inside <s> is ignored.
// Throws ParseError.
ParseResult Parse(std::string_view input, const ParseOptions &options = {});

// Writes a <tieml> document that Parse() reads back to an equal corpus.
// <doc> wrappers are omitted for a single document with an empty id.
std::string Serialize(const Corpus &corpus);

}  // namespace tieml

#endif  // TIEML_TIEML_IO_H_
