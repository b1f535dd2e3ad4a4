// Copyright 2026 The Leadlag Authors. - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace leadlag {

// Error taxonomy. The three branches below UsageError/DomainError map onto the
// CLI exit-code contract: usage/config problems -> 1, data problems -> 2,
// numeric failures -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller asked for something outside the supported configuration space
// (bad flag value, parameter out of range). Exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition on an argument was violated.
class DomainError : public UsageError {
 public:
  using UsageError::UsageError;
};

// The input data cannot be used as requested. Exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  using DataError::DataError;
};

// Timestamps not strictly increasing.
class OrderError : public DataError {
 public:
  using DataError::DataError;
};

class DuplicateTimestampError : public DataError {
 public:
  using DataError::DataError;
};

// A referenced column does not exist.
class NameError : public DataError {
 public:
  using DataError::DataError;
};

// Fewer observations than the operation needs.
class InsufficientDataError : public DataError {
 public:
  using DataError::DataError;
};

// After lag-shifting, fewer than 3 overlapping points remain.
class InsufficientOverlapError : public DataError {
 public:
  using DataError::DataError;
};

// A window (or shifted overlap) has zero variance; surfaced to series-level
// callers as a gap, never as a silent zero.
class DegenerateWindowError : public DataError {
 public:
  using DataError::DataError;
};

// A numerical routine failed to produce a trustworthy result. Exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Nonlinear solve or quadrature did not converge.
class IntegrationError : public NumericError {
 public:
  using NumericError::NumericError;
};

// An internal cross-check (monotonicity, positivity, ...) failed.
class ConsistencyError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Rank-deficient regression design.
class SingularDesignError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Residual variance vanished; the F statistic is undefined.
class DegenerateModelError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace leadlag
