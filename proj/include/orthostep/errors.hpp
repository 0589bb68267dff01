// Copyright 2026 The orthostep Authors
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

#ifndef ORTHOSTEP_ERRORS_HPP_
#define ORTHOSTEP_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthostep {

using Int = std::int64_t;

// Bad input from a caller (empty tuple, zero period, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedArity : public UsageError {
 public:
  using UsageError::UsageError;
};

// A documented precondition of an operation does not hold
// (e.g. ordering or coprimality of family parameters).
class PreconditionError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Exact division left a nonzero remainder. Always an upstream bug.
class DivisibilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A 64-bit coefficient computation left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked
}  // namespace orthostep

#endif  // ORTHOSTEP_ERRORS_HPP_
