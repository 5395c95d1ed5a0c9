// Copyright 2026 The lores-ocr Authors
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

#ifndef LORES_ERRORS_HPP_
#define LORES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lores {

// File and stream failures (missing file, short read, bad magic, ...).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed recognition output; carries the 1-based line number.
class TsvParseError : public std::runtime_error {
 public:
  TsvParseError(int line, const std::string& msg)
      : std::runtime_error("tsv line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Engine invocation failure (nonzero exit, timeout, unparseable output).
// Carries the method tag so batch runs can name the failing branch.
class BackendError : public std::runtime_error {
 public:
  BackendError(const std::string& method_tag, const std::string& msg)
      : std::runtime_error("backend [" + method_tag + "]: " + msg),
        method_tag_(method_tag) {}
  const std::string& method_tag() const { return method_tag_; }

 private:
  std::string method_tag_;
};

// Scoring failure, e.g. an empty ground truth.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lores

#endif  // LORES_ERRORS_HPP_
