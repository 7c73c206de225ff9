// Copyright 2026 The distnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTNORM_ERRORS_HPP
#define DISTNORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distnorm {

/// Base class of every error raised by the library. The CLI maps the
/// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad mask, mismatched
/// spaces, non-Hermitian input, unbalanced cut, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed operator or POVM file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The estimated work or memory exceeds the configured budget.
class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver failure, or a numerically inconsistent intermediate result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A result that needs a certified design was given an uncertified POVM.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace distnorm

#endif  // DISTNORM_ERRORS_HPP
