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

#include "wreath/bivariate_series.hpp"

#include <utility>

namespace wreath {

namespace {

const Rational& zero_rational() {
  static const Rational kZero(0);
  return kZero;
}

}  // namespace

BivariateSeries::BivariateSeries(Truncation t)
    : degree_(t.degree), coeffs_((t.degree + 1) * (t.degree + 2) / 2) {}

BivariateSeries BivariateSeries::one(Truncation t) {
  BivariateSeries f(t);
  f.set(0, 0, 1);
  return f;
}

BivariateSeries BivariateSeries::x(Truncation t) {
  BivariateSeries f(t);
  f.set(1, 0, 1);
  return f;
}

BivariateSeries BivariateSeries::y(Truncation t) {
  BivariateSeries f(t);
  f.set(0, 1, 1);
  return f;
}

// Row s = i + j starts at s(s+1)/2.
std::size_t BivariateSeries::index(std::size_t i, std::size_t j) const {
  const std::size_t s = i + j;
  return s * (s + 1) / 2 + j;
}

const Rational& BivariateSeries::coeff(std::size_t i, std::size_t j) const {
  if (i + j > degree_) return zero_rational();
  return coeffs_[index(i, j)];
}

void BivariateSeries::set(std::size_t i, std::size_t j, Rational value) {
  if (i + j > degree_) return;
  value.canonicalize();
  coeffs_[index(i, j)] = std::move(value);
}

void BivariateSeries::require_same_degree(const BivariateSeries& g) const {
  if (degree_ != g.degree_) {
    throw SeriesError(SeriesErrc::kDegreeMismatch,
                      "bivariate: truncation degrees differ");
  }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& g) {
  require_same_degree(g);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += g.coeffs_[k];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& g) {
  require_same_degree(g);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= g.coeffs_[k];
  return *this;
}

BivariateSeries operator*(const BivariateSeries& f, const BivariateSeries& g) {
  f.require_same_degree(g);
  const std::size_t n = f.degree_;
  BivariateSeries out(f.truncation());
  for (std::size_t i1 = 0; i1 <= n; ++i1) {
    for (std::size_t j1 = 0; i1 + j1 <= n; ++j1) {
      const Rational& a = f.coeff(i1, j1);
      if (sgn(a) == 0) continue;
      for (std::size_t i2 = 0; i1 + j1 + i2 <= n; ++i2) {
        for (std::size_t j2 = 0; i1 + j1 + i2 + j2 <= n; ++j2) {
          const Rational& b = g.coeff(i2, j2);
          if (sgn(b) == 0) continue;
          out.coeffs_[out.index(i1 + i2, j1 + j2)] += a * b;
        }
      }
    }
  }
  return out;
}

bool operator==(const BivariateSeries& f, const BivariateSeries& g) {
  return f.degree_ == g.degree_ && f.coeffs_ == g.coeffs_;
}

TruncatedSeries BivariateSeries::substitute(const TruncatedSeries& x_sub,
                                            const TruncatedSeries& y_sub) const {
  if (sgn(x_sub[0]) != 0 || sgn(y_sub[0]) != 0) {
    throw SeriesError(SeriesErrc::kValuation,
                      "bivariate substitute: substitutions need zero constant "
                      "term");
  }
  const Truncation t = x_sub.truncation();
  std::vector<TruncatedSeries> xp{TruncatedSeries::one(t)};
  std::vector<TruncatedSeries> yp{TruncatedSeries::one(t)};
  for (std::size_t k = 1; k <= degree_; ++k) {
    xp.push_back(xp.back() * x_sub);
    yp.push_back(yp.back() * y_sub);
  }
  TruncatedSeries out(t);
  for (std::size_t i = 0; i <= degree_; ++i) {
    for (std::size_t j = 0; i + j <= degree_; ++j) {
      const Rational& a = coeff(i, j);
      if (sgn(a) == 0) continue;
      out += (xp[i] * yp[j]) * a;
    }
  }
  return out;
}

BivariateSeries pow(const BivariateSeries& f, unsigned n) {
  BivariateSeries result = BivariateSeries::one(f.truncation());
  for (unsigned k = 0; k < n; ++k) result = result * f;
  return result;
}

BivariateSeries parry_bivariate(unsigned tree_degree, Truncation t) {
  if (tree_degree == 0) {
    throw SeriesError(SeriesErrc::kValuation,
                      "parry_bivariate: tree degree must be >= 1");
  }
  const BivariateSeries x = BivariateSeries::x(t);
  const BivariateSeries base =
      BivariateSeries::one(t) + BivariateSeries::y(t) - x;
  BivariateSeries g = BivariateSeries::one(t);
  // Each pass fixes one more total degree since x has total degree 1.
  for (std::size_t iter = 0; iter <= t.degree; ++iter) {
    g = base + x * pow(g, tree_degree - 1);
  }
  return g;
}

}  // namespace wreath
