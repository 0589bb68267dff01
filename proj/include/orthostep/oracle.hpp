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

#ifndef ORTHOSTEP_ORACLE_HPP_
#define ORTHOSTEP_ORACLE_HPP_

// Brute-force verification independent of the product formulas.
//
// A step profile with unit steps c_0..c_{L-1} is orthogonal to every
// nonzero-frequency T-periodic exponential exactly when its coefficient sums
// over the residue classes mod T are all equal. The oracle solves that linear
// system directly, column by column in exact integer arithmetic, and reports
// the first length L at which a nonzero solution appears.

#include <optional>
#include <span>
#include <vector>

#include "orthostep/builder.hpp"

namespace orthostep {

struct PeriodCheck {
  Int period = 1;   // in original units
  Int modulus = 1;  // period measured in steps of the profile
  std::vector<Int> sums;
  bool pass = false;
};

struct OrthoReport {
  std::vector<PeriodCheck> period_checks;
  // Filled by minimal_orthogonal only.
  std::optional<Int> minimal_length;
  Int nullspace_dimension = 0;
  std::vector<Int> oracle_profile;

  bool all_pass() const;
  bool found() const { return minimal_length.has_value(); }
};

/// Residue-class checks of `values` against each modulus (in step units).
std::vector<PeriodCheck> check_residue_sums(std::span<const Int> values, std::span<const Int> moduli);

/// Residue-class checks of a built profile against each of its periods.
/// Throws UsageError if a period is not a multiple of the step width.
OrthoReport verify_orthogonality(const StepProfile& profile);

/// Scans L = 1..l_max over the normalized periods and stops at the first L
/// with a nonzero solution. When none exists up to l_max the report has no
/// minimal_length. The oracle profile is a primitive integer vector with a
/// positive first nonzero entry.
OrthoReport minimal_orthogonal(const PeriodSet& periods, Int l_max);

/// Dimension of the solution space for profiles of length L.
Int nullspace_dimension(const PeriodSet& periods, Int length);

/// True iff b = lambda * a for some rational lambda > 0 (both nonzero,
/// same length).
bool proportional_positive(std::span<const Int> a, std::span<const Int> b);

}  // namespace orthostep

#endif  // ORTHOSTEP_ORACLE_HPP_
