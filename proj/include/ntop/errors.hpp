// Copyright 2026 The ntop Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ntop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was not met by its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The successor set of a dot is infinite (e.g. the maximal dot of sigma_R).
class UnsupportedEnumeration : public Error {
 public:
  using Error::Error;
};

/// A morphism or transducer broke its contract (non-refining output, empty
/// intersection of widened values, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Two spaces that should coincide do not.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// A stream failed to make progress within its fuel budget.
class StallError : public Error {
 public:
  StallError(const std::string& what, std::size_t fuel)
      : Error(what + " (fuel " + std::to_string(fuel) + " exhausted)"), fuel_(fuel) {}

  std::size_t fuel() const noexcept { return fuel_; }

 private:
  std::size_t fuel_;
};

/// A stream was asked for an index beyond the finite structure backing it.
class DepthExhausted : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (dots, rationals, expressions, presentations).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A metric presentation or fann construction failed validation.
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

}  // namespace ntop
