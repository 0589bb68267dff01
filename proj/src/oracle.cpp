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

#include "orthostep/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <string>

namespace orthostep {
namespace {

// Incremental rank computation over the columns of the constraint matrix
//
//   row (i, r), r = 1..T_i - 1:  S_r(c) - S_0(c) = 0  (residue sums mod T_i)
//
// Each accepted column becomes a basis vector with a fresh pivot row; basis
// vector j is zero on the pivots of all earlier basis vectors, so one ordered
// sweep clears every pivot of an incoming column. Alongside each vector we
// carry the column combination that produced it. Arithmetic is fraction-free
// on mpz with content removal after every step.
class ColumnEliminator {
 public:
  explicit ColumnEliminator(std::span<const Int> moduli) : moduli_(moduli.begin(), moduli.end()) {
    for (Int m : moduli_) rows_ += static_cast<std::size_t>(m - 1);
  }

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return basis_.size(); }

  // Appends column `columns()`; returns the integer dependency it closes, if any.
  std::optional<std::vector<mpz_class>> push_column() {
    const std::size_t k = columns_++;
    Entry e;
    e.vec = column(k);
    e.comb.assign(k + 1, 0);
    e.comb[k] = 1;

    for (auto& b : basis_) {
      const mpz_class& bp = b.vec[b.pivot];
      if (sgn(e.vec[b.pivot]) == 0) continue;
      const mpz_class f = e.vec[b.pivot];
      // e := bp * e - f * b
      for (std::size_t r = 0; r < rows_; ++r) e.vec[r] = bp * e.vec[r] - f * b.vec[r];
      for (std::size_t c = 0; c <= k; ++c) {
        e.comb[c] *= bp;
        if (c < b.comb.size()) e.comb[c] -= f * b.comb[c];
      }
      remove_content(e);
    }

    const auto nz = std::find_if(e.vec.begin(), e.vec.end(), [](const mpz_class& v) { return sgn(v) != 0; });
    if (nz == e.vec.end()) return std::move(e.comb);
    e.pivot = static_cast<std::size_t>(nz - e.vec.begin());
    basis_.push_back(std::move(e));
    return std::nullopt;
  }

 private:
  struct Entry {
    std::vector<mpz_class> vec;
    std::vector<mpz_class> comb;
    std::size_t pivot = 0;
  };

  std::vector<mpz_class> column(std::size_t k) const {
    std::vector<mpz_class> col(rows_, 0);
    std::size_t offset = 0;
    for (Int m : moduli_) {
      const auto mm = static_cast<std::size_t>(m);
      const std::size_t residue = k % mm;
      if (residue == 0) {
        for (std::size_t r = 0; r + 1 < mm; ++r) col[offset + r] = -1;
      } else {
        col[offset + residue - 1] = 1;
      }
      offset += mm - 1;
    }
    return col;
  }

  static void remove_content(Entry& e) {
    mpz_class g = 0;
    for (const auto& v : e.vec) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (const auto& v : e.comb) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g <= 1) return;
    for (auto& v : e.vec) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    for (auto& v : e.comb) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  std::vector<Int> moduli_;
  std::size_t rows_ = 0;
  std::size_t columns_ = 0;
  std::vector<Entry> basis_;
};

std::vector<Int> canonical_profile(std::vector<mpz_class> v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  const auto first = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) != 0; });
  if (first == v.end()) throw ConsistencyError("oracle produced a zero dependency");
  if (sgn(*first) < 0) g = -g;
  std::vector<Int> out;
  out.reserve(v.size());
  for (auto& x : v) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (!x.fits_slong_p()) throw OverflowError("oracle profile entry exceeds 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

}  // namespace

bool OrthoReport::all_pass() const {
  return std::all_of(period_checks.begin(), period_checks.end(), [](const PeriodCheck& c) { return c.pass; });
}

std::vector<PeriodCheck> check_residue_sums(std::span<const Int> values, std::span<const Int> moduli) {
  std::vector<PeriodCheck> out;
  for (Int m : moduli) {
    PeriodCheck pc;
    pc.period = m;
    pc.modulus = m;
    pc.sums = residue_class_sums(values, m);
    pc.pass = std::adjacent_find(pc.sums.begin(), pc.sums.end(), std::not_equal_to<>()) == pc.sums.end();
    out.push_back(std::move(pc));
  }
  return out;
}

OrthoReport verify_orthogonality(const StepProfile& profile) {
  OrthoReport report;
  for (Int period : profile.periods.original()) {
    if (period % profile.step_width != 0) {
      throw UsageError("period " + std::to_string(period) + " is not a multiple of the step width " +
                       std::to_string(profile.step_width));
    }
    const Int modulus = period / profile.step_width;
    PeriodCheck pc = std::move(check_residue_sums(profile.values, std::span<const Int>(&modulus, 1)).front());
    pc.period = period;
    report.period_checks.push_back(std::move(pc));
  }
  return report;
}

OrthoReport minimal_orthogonal(const PeriodSet& periods, Int l_max) {
  if (l_max < 1) throw UsageError("minimal_orthogonal: L_max must be positive");
  ColumnEliminator elim(periods.normalized());
  OrthoReport report;
  for (Int len = 1; len <= l_max; ++len) {
    if (auto dep = elim.push_column()) {
      report.minimal_length = len;
      report.nullspace_dimension = len - static_cast<Int>(elim.rank());
      report.oracle_profile = canonical_profile(std::move(*dep));
      report.period_checks = check_residue_sums(report.oracle_profile, periods.normalized());
      for (std::size_t i = 0; i < report.period_checks.size(); ++i) {
        report.period_checks[i].period = periods.original()[i];
      }
      return report;
    }
  }
  return report;
}

Int nullspace_dimension(const PeriodSet& periods, Int length) {
  if (length < 1) throw UsageError("nullspace_dimension: length must be positive");
  ColumnEliminator elim(periods.normalized());
  for (Int len = 1; len <= length; ++len) elim.push_column();
  return length - static_cast<Int>(elim.rank());
}

bool proportional_positive(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size() || a.empty()) return false;
  const auto ia = std::find_if(a.begin(), a.end(), [](Int v) { return v != 0; });
  if (ia == a.end()) return false;
  const std::size_t k = static_cast<std::size_t>(ia - a.begin());
  if (b[k] == 0 || (a[k] > 0) != (b[k] > 0)) return false;
  // b = (b_k / a_k) a  <=>  b_i a_k == a_i b_k for all i.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mpz_class(b[i]) * a[k] != mpz_class(a[i]) * b[k]) return false;
  }
  return true;
}

}  // namespace orthostep
