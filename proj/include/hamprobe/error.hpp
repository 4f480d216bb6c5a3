// Copyright 2026 The hamprobe Authors
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

namespace hamprobe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live on different qubit counts, or a vector has the wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A dense operation was requested above the dense-simulation cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A protocol or generator received parameters outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input data failed validation (non-finite, duplicate labels, bad norms).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An instance generator could not meet the requested distance.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed file or unreadable path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Largest qubit count for which dense 2^n x 2^n matrices are built.
/// Defaults to 12 and can be overridden with HAMPROBE_DENSE_CAP.
int dense_cap();

/// Throws CapacityError when n exceeds dense_cap().
void require_dense(int n, const char* what);

}  // namespace hamprobe
