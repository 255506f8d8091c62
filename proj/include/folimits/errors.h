// Copyright 2026 The folimits Authors
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

#ifndef FOLIMITS_ERRORS_H_
#define FOLIMITS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace folimits {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A subcritical-only operation was called with x = c/(d-2)! >= 1.
class SupercriticalError : public Error {
 public:
  using Error::Error;
};

// A labeled structure is not a unicycle (disconnected or wrong excess).
class ClassificationError : public Error {
 public:
  using Error::Error;
};

// Cache directory or file problems.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace folimits

#endif  // FOLIMITS_ERRORS_H_
