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

#include "wreath/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "json.hpp"

namespace wreath {

namespace {

const Rational& zero_rational() {
  static const Rational kZero(0);
  return kZero;
}

}  // namespace

TruncatedSeries::TruncatedSeries(Truncation t) : coeffs_(t.degree + 1) {}

TruncatedSeries::TruncatedSeries(Truncation t,
                                 std::initializer_list<Rational> coeffs)
    : TruncatedSeries(t, std::vector<Rational>(coeffs)) {}

TruncatedSeries::TruncatedSeries(Truncation t, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(t.degree + 1);
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::one(Truncation t) {
  TruncatedSeries f(t);
  f.coeffs_[0] = 1;
  return f;
}

TruncatedSeries TruncatedSeries::monomial(Truncation t, std::size_t exponent,
                                          Rational coeff) {
  TruncatedSeries f(t);
  if (exponent <= t.degree) f.set(exponent, std::move(coeff));
  return f;
}

TruncatedSeries TruncatedSeries::geometric(Truncation t, Rational ratio) {
  TruncatedSeries f(t);
  Rational term = 1;
  for (std::size_t m = 0; m <= t.degree; ++m) {
    f.coeffs_[m] = term;
    term *= ratio;
  }
  return f;
}

const Rational& TruncatedSeries::operator[](std::size_t m) const {
  return m < coeffs_.size() ? coeffs_[m] : zero_rational();
}

void TruncatedSeries::set(std::size_t m, Rational value) {
  if (m >= coeffs_.size()) return;
  value.canonicalize();
  coeffs_[m] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (sgn(coeffs_[m]) != 0) return m;
  }
  return coeffs_.size();
}

bool TruncatedSeries::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
    return c.get_den() == 1;
  });
}

bool TruncatedSeries::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) >= 0; });
}

void TruncatedSeries::require_same_degree(const TruncatedSeries& g,
                                          const char* op) const {
  if (degree() != g.degree()) {
    throw SeriesError(SeriesErrc::kDegreeMismatch,
                      std::string(op) + ": truncation degrees differ (" +
                          std::to_string(degree()) + " vs " +
                          std::to_string(g.degree()) + ")");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& g) {
  require_same_degree(g, "add");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += g.coeffs_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& g) {
  require_same_degree(g, "sub");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= g.coeffs_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& g) {
  *this = *this * g;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  f.require_same_degree(g, "mul");
  const std::size_t n = f.coeffs_.size();
  TruncatedSeries out(f.truncation());
  // Index lists of nonzero terms; most series here are sparse (f(z^r) has
  // density 1/r) so skipping zeros dominates the cost.
  std::vector<std::size_t> fi, gi;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(f.coeffs_[i]) != 0) fi.push_back(i);
    if (sgn(g.coeffs_[i]) != 0) gi.push_back(i);
  }
  Rational prod;
  for (std::size_t i : fi) {
    for (std::size_t j : gi) {
      if (i + j >= n) break;
      prod = f.coeffs_[i] * g.coeffs_[j];
      out.coeffs_[i + j] += prod;
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f.coeffs_ == g.coeffs_;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries out(truncation());
  for (std::size_t m = 0; m + k < coeffs_.size(); ++m) {
    out.coeffs_[m + k] = coeffs_[m];
  }
  return out;
}

TruncatedSeries TruncatedSeries::retruncated(Truncation t) const {
  TruncatedSeries out(t);
  for (std::size_t m = 0; m <= t.degree && m < coeffs_.size(); ++m) {
    out.coeffs_[m] = coeffs_[m];
  }
  return out;
}

double TruncatedSeries::evaluate(double t) const {
  double acc = 0.0;
  for (std::size_t m = coeffs_.size(); m-- > 0;) {
    acc = acc * t + coeffs_[m].get_d();
  }
  return acc;
}

std::string TruncatedSeries::to_json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree();
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(to_fraction_string(c));
  j["coeffs"] = std::move(arr);
  return j.dump();
}

TruncatedSeries TruncatedSeries::from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw SeriesError(SeriesErrc::kParse, std::string("series JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs") ||
      !j["coeffs"].is_array() || !j["degree"].is_number_unsigned()) {
    throw SeriesError(SeriesErrc::kParse,
                      "series JSON: expected {\"degree\": n, \"coeffs\": [...]}");
  }
  const std::size_t degree = j["degree"].get<std::size_t>();
  if (j["coeffs"].size() != degree + 1) {
    throw SeriesError(SeriesErrc::kParse,
                      "series JSON: coeffs length must equal degree + 1");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(degree + 1);
  for (const auto& c : j["coeffs"]) {
    if (c.is_string()) {
      coeffs.push_back(parse_fraction(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(std::to_string(c.get<long long>()));
    } else {
      throw SeriesError(SeriesErrc::kParse,
                        "series JSON: coefficients must be fraction strings");
    }
  }
  return TruncatedSeries(Truncation{degree}, std::move(coeffs));
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f + g;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f * g;
}

TruncatedSeries pow(const TruncatedSeries& f, unsigned n) {
  TruncatedSeries result = TruncatedSeries::one(f.truncation());
  TruncatedSeries base = f;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

TruncatedSeries substitute_power(const TruncatedSeries& f, unsigned r) {
  if (r == 0) {
    throw SeriesError(SeriesErrc::kCompositionDomain,
                      "substitute_power: exponent must be >= 1");
  }
  TruncatedSeries out(f.truncation());
  for (std::size_t m = 0; m * r <= f.degree(); ++m) out.set(m * r, f[m]);
  return out;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (sgn(g[0]) != 0) {
    throw SeriesError(SeriesErrc::kCompositionDomain,
                      "compose: inner series must have zero constant term");
  }
  if (f.degree() != g.degree()) {
    throw SeriesError(SeriesErrc::kDegreeMismatch,
                      "compose: truncation degrees differ");
  }
  // Horner: f0 + g(f1 + g(f2 + ...)).
  TruncatedSeries acc(f.truncation());
  for (std::size_t m = f.degree() + 1; m-- > 0;) {
    acc *= g;
    acc.set(0, acc[0] + f[m]);
  }
  return acc;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  if (sgn(f[0]) == 0) {
    throw SeriesError(SeriesErrc::kNotInvertible,
                      "reciprocal: constant term is zero");
  }
  const std::size_t n = f.degree();
  TruncatedSeries out(f.truncation());
  const Rational inv0 = 1 / f[0];
  std::vector<Rational> r(n + 1);
  r[0] = inv0;
  Rational acc;
  for (std::size_t m = 1; m <= n; ++m) {
    acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (sgn(f[k]) != 0) acc += f[k] * r[m - k];
    }
    r[m] = -acc * inv0;
  }
  return TruncatedSeries(f.truncation(), std::move(r));
}

TruncatedSeries parry_fixed_point(unsigned tree_degree,
                                  const TruncatedSeries& x_sub,
                                  const TruncatedSeries& y_sub) {
  if (tree_degree == 0) {
    throw SeriesError(SeriesErrc::kValuation,
                      "parry_fixed_point: tree degree must be >= 1");
  }
  if (sgn(x_sub[0]) != 0 || sgn(y_sub[0]) != 0) {
    throw SeriesError(SeriesErrc::kValuation,
                      "parry_fixed_point: substitutions must have zero "
                      "constant term");
  }
  if (x_sub.degree() != y_sub.degree()) {
    throw SeriesError(SeriesErrc::kDegreeMismatch,
                      "parry_fixed_point: truncation degrees differ");
  }
  const Truncation t = x_sub.truncation();
  const TruncatedSeries base = TruncatedSeries::one(t) + y_sub - x_sub;
  TruncatedSeries g = TruncatedSeries::one(t);
  for (std::size_t iter = 0; iter <= t.degree; ++iter) {
    g = base + x_sub * pow(g, tree_degree - 1);
  }
  return g;
}

std::string to_fraction_string(const Rational& q) { return q.get_str(); }

Rational parse_fraction(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw SeriesError(SeriesErrc::kParse, "empty fraction");
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw SeriesError(SeriesErrc::kParse, "malformed fraction: " + s);
  }
  if (q.get_den() == 0) {
    throw SeriesError(SeriesErrc::kParse, "zero denominator: " + s);
  }
  q.canonicalize();
  return q;
}

double log_abs(const Rational& q) {
  auto log_mpz = [](const mpz_class& z) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
  };
  return log_mpz(q.get_num()) - log_mpz(q.get_den());
}

}  // namespace wreath
