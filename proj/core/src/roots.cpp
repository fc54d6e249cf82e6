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

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "wreath/series.hpp"

namespace wreath {

double find_unit_root(const TruncatedSeries& f, double tol) {
  if (!(tol > 0.0)) {
    throw SeriesError(SeriesErrc::kRootNotBracketed,
                      "find_unit_root: tolerance must be positive");
  }
  if (sgn(f[0]) != 0 || f.is_zero() || !f.all_nonnegative()) {
    throw SeriesError(SeriesErrc::kRootNotBracketed,
                      "find_unit_root: need nonnegative coefficients, zero "
                      "constant term and f != 0");
  }
  double lo = 0.0;
  double hi = tol;
  while (f.evaluate(hi) < 1.0) {
    if (hi >= 1.0) {
      throw SeriesError(SeriesErrc::kRootNotBracketed,
                        "find_unit_root: truncated series stays below 1 on "
                        "(0, 1]; raise the truncation degree");
    }
    lo = hi;
    hi = std::min(1.0, hi * 2.0);
  }
  // f is increasing on the positive axis, so [lo, hi] brackets the root.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double v = f.evaluate(mid);
    if (std::fabs(v - 1.0) <= tol && hi - lo <= tol) return mid;
    if (v < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-17) break;
  }
  return 0.5 * (lo + hi);
}

double root_test_estimate(const TruncatedSeries& f, std::size_t window) {
  const std::size_t n = f.degree();
  if (window == 0 || window > n) {
    throw SeriesError(SeriesErrc::kUndefinedEstimate,
                      "root_test_estimate: window must be in [1, degree]");
  }
  double best = -INFINITY;
  for (std::size_t m = n - window + 1; m <= n; ++m) {
    if (sgn(f[m]) == 0) continue;
    best = std::max(best, log_abs(f[m]) / static_cast<double>(m));
  }
  if (best == -INFINITY) {
    throw SeriesError(SeriesErrc::kUndefinedEstimate,
                      "root_test_estimate: all coefficients in the window are "
                      "zero");
  }
  return std::exp(-best);
}

double root_test_extrapolated(const TruncatedSeries& f, std::size_t window) {
  const std::size_t n = f.degree();
  if (window < 3 || window > n) {
    throw SeriesError(SeriesErrc::kUndefinedEstimate,
                      "root_test_extrapolated: window must be in [3, degree]");
  }
  // Normal equations for y = c0 + c1/m + c2*log(m)/m.
  std::array<std::array<double, 3>, 3> ata{};
  std::array<double, 3> aty{};
  std::size_t used = 0;
  for (std::size_t m = n - window + 1; m <= n; ++m) {
    if (sgn(f[m]) == 0) continue;
    const double md = static_cast<double>(m);
    const std::array<double, 3> row{1.0, 1.0 / md, std::log(md) / md};
    const double y = log_abs(f[m]) / md;
    for (int i = 0; i < 3; ++i) {
      aty[i] += row[i] * y;
      for (int j = 0; j < 3; ++j) ata[i][j] += row[i] * row[j];
    }
    ++used;
  }
  if (used < 3) {
    throw SeriesError(SeriesErrc::kUndefinedEstimate,
                      "root_test_extrapolated: fewer than three nonzero "
                      "coefficients in the window");
  }
  // Gaussian elimination with partial pivoting on the 3x3 system.
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::fabs(ata[r][col]) > std::fabs(ata[piv][col])) piv = r;
    }
    std::swap(ata[col], ata[piv]);
    std::swap(aty[col], aty[piv]);
    if (std::fabs(ata[col][col]) < 1e-300) {
      throw SeriesError(SeriesErrc::kUndefinedEstimate,
                        "root_test_extrapolated: singular fit");
    }
    for (int r = col + 1; r < 3; ++r) {
      const double factor = ata[r][col] / ata[col][col];
      for (int c = col; c < 3; ++c) ata[r][c] -= factor * ata[col][c];
      aty[r] -= factor * aty[col];
    }
  }
  std::array<double, 3> coef{};
  for (int r = 2; r >= 0; --r) {
    double acc = aty[r];
    for (int c = r + 1; c < 3; ++c) acc -= ata[r][c] * coef[c];
    coef[r] = acc / ata[r][r];
  }
  return std::exp(-coef[0]);
}

}  // namespace wreath
