/*
 * Copyright 2026 The advopt Authors
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

#ifndef ADVOPT_ERRORS_HPP
#define ADVOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace advopt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A JSON document does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Pruning non-essential letters left no bi-infinite point.
class EmptyShiftError : public Error {
 public:
  using Error::Error;
};

class UnknownLetter : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation needs a certified transitivity constant and none was found.
class NotTransitive : public Error {
 public:
  using Error::Error;
};

/// Two certified bounds contradict each other.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class NoCycle : public Error {
 public:
  using Error::Error;
};

class IntervalOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A self-checking scenario found a failed check.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace advopt

#endif  // ADVOPT_ERRORS_HPP
