// Copyright 2026 The iqwalk Authors
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

namespace iqwalk {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensions of an argument do not match what the operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its mathematical domain (e.g. a GHZ state on one qubit).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bad user input: unknown metric name, malformed angle token, etc.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A numeric precondition failed beyond tolerance (non-Hermitian input,
/// trace not one, negative eigenvalue, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public ContractError {
 public:
  using ContractError::ContractError;
};

/// Post-selection onto an outcome that has (numerically) zero probability.
class ZeroProbabilityError : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace iqwalk
