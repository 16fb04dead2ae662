// Copyright 2026 The artin-parabolic Authors
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

#ifndef ARTIN_ERROR_HPP_
#define ARTIN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

// Base class of every domain error raised by the library. `kind()` is the
// stable module-level error name reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed presentation or word input. `line()` is 1-based, 0 when the
// input has no line structure (JSON, command-line words).
class ParseError : public Error {
 public:
  ParseError(std::string kind, std::size_t line, const std::string& msg)
      : Error(std::move(kind),
              line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& msg)
      : Error("UnknownGenerator", msg) {}
};

class NoEdge : public Error {
 public:
  explicit NoEdge(const std::string& msg) : Error("NoEdge", msg) {}
};

// The braid-move closure of a word grew past the configured cap.
class ClosureCapExceeded : public Error {
 public:
  explicit ClosureCapExceeded(const std::string& msg)
      : Error("ClosureCapExceeded", msg) {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& msg)
      : Error("PreconditionViolated", msg) {}
};

class InternalAssertion : public Error {
 public:
  explicit InternalAssertion(const std::string& msg)
      : Error("InternalAssertion", msg) {}
};

// An operation was asked to work on a presentation outside its class, e.g.
// a right-angled normal form on a graph with a label > 2.
class WrongPresentationClass : public Error {
 public:
  explicit WrongPresentationClass(const std::string& msg)
      : Error("WrongPresentationClass", msg) {}
};

class SearchExhausted : public Error {
 public:
  explicit SearchExhausted(const std::string& msg)
      : Error("SearchExhausted", msg) {}
};

}  // namespace artin

#endif  // ARTIN_ERROR_HPP_
