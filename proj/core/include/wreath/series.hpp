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

#ifndef WREATH_SERIES_HPP_
#define WREATH_SERIES_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wreath {

using Integer = mpz_class;
using Rational = mpq_class;

enum class SeriesErrc {
  kDegreeMismatch,
  kNotInvertible,
  kCompositionDomain,
  kValuation,
  kRootNotBracketed,
  kUndefinedEstimate,
  kParse,
};

class SeriesError : public std::runtime_error {
 public:
  SeriesError(SeriesErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  SeriesErrc code() const noexcept { return code_; }

 private:
  SeriesErrc code_;
};

// Maximum retained exponent, inclusive. Arithmetic is exact modulo
// z^(degree+1).
struct Truncation {
  std::size_t degree = 0;
  friend bool operator==(Truncation, Truncation) = default;
};

// Univariate formal power series over Q, truncated at a fixed degree.
//
// Every operation between two series requires equal truncation degrees;
// a mismatch throws SeriesError(kDegreeMismatch) instead of silently
// re-truncating. Values are immutable in spirit: operators return new
// series and the mutating accessors exist only for construction.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(Truncation t);
  TruncatedSeries(Truncation t, std::initializer_list<Rational> coeffs);
  TruncatedSeries(Truncation t, std::vector<Rational> coeffs);

  static TruncatedSeries zero(Truncation t) { return TruncatedSeries(t); }
  static TruncatedSeries one(Truncation t);
  static TruncatedSeries monomial(Truncation t, std::size_t exponent,
                                  Rational coeff = 1);
  // Prefix of 1/(1 - ratio*z).
  static TruncatedSeries geometric(Truncation t, Rational ratio = 1);

  Truncation truncation() const noexcept { return {coeffs_.size() - 1}; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  // [z^m]; returns 0 beyond the truncation degree.
  const Rational& operator[](std::size_t m) const;
  void set(std::size_t m, Rational value);
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  // Index of the first nonzero coefficient, or degree()+1 for the zero series.
  std::size_t valuation() const;
  bool all_integral() const;
  bool all_nonnegative() const;

  TruncatedSeries& operator+=(const TruncatedSeries& g);
  TruncatedSeries& operator-=(const TruncatedSeries& g);
  TruncatedSeries& operator*=(const TruncatedSeries& g);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) {
    return f += g;
  }
  friend TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g) {
    return f -= g;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& f,
                                   const TruncatedSeries& g);
  friend TruncatedSeries operator*(TruncatedSeries f, const Rational& c) {
    return f *= c;
  }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries f) {
    return f *= c;
  }
  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g);

  // Multiplication by z^k, dropping what falls past the degree.
  TruncatedSeries shifted(std::size_t k) const;
  // Same coefficients carried at another truncation degree (explicit only).
  TruncatedSeries retruncated(Truncation t) const;

  // Evaluates the truncated polynomial in double precision.
  double evaluate(double t) const;

  // {"degree": n, "coeffs": ["p/q", ...]}
  std::string to_json() const;
  static TruncatedSeries from_json(std::string_view json);

 private:
  void require_same_degree(const TruncatedSeries& g, const char* op) const;

  std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries pow(const TruncatedSeries& f, unsigned n);

// f(z^r).
TruncatedSeries substitute_power(const TruncatedSeries& f, unsigned r);

// f(g(z)) by Horner's rule; g must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

// 1/f; f must have nonzero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& f);

// Solves G = 1 + y - x + x*G^(D-1) for G(z) = F(x(z), y(z)), where F is the
// two-variable series counting rooted subtrees of the D-regular tree by
// non-leaves and leaves. x and y must have zero constant term. Iterates
// exactly degree+1 times from G = 1.
TruncatedSeries parry_fixed_point(unsigned tree_degree,
                                  const TruncatedSeries& x_sub,
                                  const TruncatedSeries& y_sub);

// Unique t > 0 with f(t) = 1 for f with nonnegative coefficients and zero
// constant term, found by doubling then bisection on the truncated
// polynomial in double precision.
double find_unit_root(const TruncatedSeries& f, double tol = 1e-12);

// 1 / max_{m in last `window` indices} |a_m|^(1/m). An estimate of the
// radius of convergence, not an exact value.
double root_test_estimate(const TruncatedSeries& f, std::size_t window);

// Least-squares fit of log|a_m|/m = log(1/R) + (alpha + beta*log m)/m over
// the last `window` nonzero coefficients; returns the fitted R. Removes the
// polynomial prefactor bias the plain root test carries at finite m.
double root_test_extrapolated(const TruncatedSeries& f, std::size_t window);

// Exact fraction string "p/q" or "p" for integers.
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(std::string_view text);

// Natural logarithm of |q| for arbitrarily large rationals; q must be nonzero.
double log_abs(const Rational& q);

}  // namespace wreath

#endif  // WREATH_SERIES_HPP_
