// Copyright 2026 The mvfep Authors
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

#ifndef MVFEP_ERRORS_HPP
#define MVFEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvfep {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid argument: bad dimensions, duplicate elements,
/// foreign carrier elements, malformed tables, and similar.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Division by zero in exact arithmetic.
class DivisionByZero : public InvalidInput {
 public:
  DivisionByZero() : InvalidInput("division by zero") {}
};

/// A configured resource cap (e.g. solver row cap) was exceeded.
/// This is a refusal to continue, never a wrong answer.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A produced object failed its own verification; indicates a bug or a
/// deliberately corrupted witness bundle.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace mvfep

#endif  // MVFEP_ERRORS_HPP
