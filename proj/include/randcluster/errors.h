// Copyright 2026 The randcluster Authors
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

#ifndef RANDCLUSTER_ERRORS_H
#define RANDCLUSTER_ERRORS_H

#include <stdexcept>
#include <string>

namespace randcluster {

/// Precondition violated by the caller (bad dimensions, indices, ranges).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size cap (e.g. full density matrix for n > 10).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base for recoverable numerical failures raised by the analysis layer.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FitDegenerate : public NumericError {
 public:
  using NumericError::NumericError;
};

class NoCrossing : public NumericError {
 public:
  using NumericError::NumericError;
};

class BootstrapUnstable : public NumericError {
 public:
  using NumericError::NumericError;
};

class NoInteriorMax : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace randcluster

#endif  // RANDCLUSTER_ERRORS_H
