// Copyright 2026 The wreathgrowth Authors
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

#ifndef WREATH_WREATH_SERIES_HPP_
#define WREATH_WREATH_SERIES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "wreath/finite_group.hpp"
#include "wreath/series.hpp"
#include "wreath/word.hpp"

namespace wreath {

// G wr L with lamp series for (G, Y) and base L = F_M * C2^{*N}.
struct WreathSpec {
  GroupSeriesInput lamp;
  TreeGroupSpec base;
  Truncation degree;

  // Builds the spec with the lamp series carried at `degree`.
  WreathSpec(GroupSeriesInput lamp_in, TreeGroupSpec base_in, Truncation t);
  void validate() const;
};

// z s(z) F_T(z^2 s, z^2 (s-1))^(D-2) with s the standard growth series of G.
// Requires D = 2M+N >= 2.
TruncatedSeries f_E(const WreathSpec& spec);

// count(k) F_E(z)^k with count(k) the number of cyclically reduced words of
// length k.
TruncatedSeries conjrep_k_series(const WreathSpec& spec, unsigned k);

// Classes with cursor of infinite order:
// sum_r phi(r)/r sum_s count(s)/s F_E(z^r)^s over r s <= degree.
TruncatedSeries cgs_A(const WreathSpec& spec);

// Classes with a nontrivial torsion cursor:
// N z c(z) F_T(z^2 c, z^2 (c-1))^(D-1) with c the conjugacy series of G.
TruncatedSeries cgs_torsion_cursor(const WreathSpec& spec);

// Classes with trivial cursor, summed over orbit representatives of finite
// subtrees with at most degree/2 edges (weighted by Burnside's lemma).
TruncatedSeries cgs_trivial_cursor(const WreathSpec& spec);

// cgs_A + cgs_torsion_cursor + cgs_trivial_cursor. For L = C2 (D = 1) this is
// the G wr C2 closed form.
TruncatedSeries cgs_total(const WreathSpec& spec);

// Closed forms for particular bases.
TruncatedSeries cgs_closed_form_C2(const GroupSeriesInput& lamp, Truncation t);
TruncatedSeries cgs_closed_form_Z(const GroupSeriesInput& lamp, Truncation t);
TruncatedSeries cgs_closed_form_C2C2(const GroupSeriesInput& lamp, Truncation t);
TruncatedSeries cgs_closed_form_lamplighter(Truncation t);
// Dispatches on the base: (0,1) -> C2, (1,0) -> Z, (0,2) -> C2*C2.
std::optional<TruncatedSeries> cgs_closed_form(const WreathSpec& spec);

struct RcReport {
  double t_formula = 0;             // root of (D-1) F_E(t) = 1
  double t_cgs_estimate = 0;        // plain root test on the cgs prefix
  double t_cgs_extrapolated = 0;    // fitted root test on the cgs prefix
  std::optional<double> t_sgs_estimate;
  std::optional<double> t_sgs_extrapolated;
  std::size_t cgs_window = 0;
  std::size_t sgs_window = 0;
};

// `sgs_prefix` is a brute-force standard growth series of the wreath product,
// when available. Windows are the trailing index counts used by the root tests.
RcReport rc_report(const WreathSpec& spec, double tol = 1e-12,
                   std::size_t cgs_window = 20,
                   const std::optional<TruncatedSeries>& sgs_prefix = {},
                   std::size_t sgs_window = 4);

struct AsymptoticRow {
  unsigned m = 0;
  Integer coeff;
  double estimate = 0;  // (2/m) phi^m
  double ratio = 0;     // coeff / estimate
};

// Exact lamplighter conjugacy coefficients against (2/m) phi^m for m in
// [m_lo, m_hi], using the series truncated at `degree` >= m_hi.
std::vector<AsymptoticRow> lamplighter_asymptotic_check(std::size_t degree,
                                                        unsigned m_lo,
                                                        unsigned m_hi);

unsigned euler_phi(unsigned n);

}  // namespace wreath

#endif  // WREATH_WREATH_SERIES_HPP_
