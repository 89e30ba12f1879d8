/*
 * Copyright 2026 The streampart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef STREAMPART_ERRORS_HPP
#define STREAMPART_ERRORS_HPP

#include <stdexcept>

namespace streampart {

/// Base for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Separators violate the partitioning invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed stream text, rational literal or config.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An element exceeded the maximum weight the caller declared.
class DeclaredBoundViolation : public Error {
 public:
  using Error::Error;
};

/// Declared m, n or S disagrees with what the pass observed.
class KnowledgeMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the domain of an operation (p < 2, negative epsilon, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Misuse of an API contract, e.g. feeding a failed probe. Indicates a caller bug.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace streampart

#endif  // STREAMPART_ERRORS_HPP
