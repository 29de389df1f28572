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

#ifndef TIEML_FORMAT_ERROR_H_
#define TIEML_FORMAT_ERROR_H_

#include <stdexcept>
#include <string>

namespace tieml {

// Malformed or schema-violating interchange input. location() is a JSON
// pointer for JSON input and "line N" for line-oriented formats.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string location, const std::string &detail)
      : std::runtime_error(location + ": " + detail), location_(std::move(location)) {}

  const std::string &location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace tieml

#endif  // TIEML_FORMAT_ERROR_H_
