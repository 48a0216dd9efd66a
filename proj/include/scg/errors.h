// Copyright 2026 The SCG Authors. All rights reserved.
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

#ifndef SCG_ERRORS_H_
#define SCG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace scg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An alpha vector or matrix, a weight or a family size is out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A profile could not be evaluated (bad index, unregistered default).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured profile budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or rational text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The input violates an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace scg

#endif  // SCG_ERRORS_H_
