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

#ifndef WREATH_BIVARIATE_SERIES_HPP_
#define WREATH_BIVARIATE_SERIES_HPP_

#include <cstddef>
#include <vector>

#include "wreath/series.hpp"

namespace wreath {

// Two-variable series sum a_ij x^i y^j over Q retaining all terms with
// i + j <= degree. Stored densely in a triangular layout.
class BivariateSeries {
 public:
  explicit BivariateSeries(Truncation t);

  static BivariateSeries one(Truncation t);
  static BivariateSeries x(Truncation t);
  static BivariateSeries y(Truncation t);

  std::size_t degree() const noexcept { return degree_; }
  Truncation truncation() const noexcept { return {degree_}; }

  // a_ij, zero when i + j > degree.
  const Rational& coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rational value);

  BivariateSeries& operator+=(const BivariateSeries& g);
  BivariateSeries& operator-=(const BivariateSeries& g);
  friend BivariateSeries operator+(BivariateSeries f, const BivariateSeries& g) {
    return f += g;
  }
  friend BivariateSeries operator-(BivariateSeries f, const BivariateSeries& g) {
    return f -= g;
  }
  friend BivariateSeries operator*(const BivariateSeries& f,
                                   const BivariateSeries& g);
  friend bool operator==(const BivariateSeries& f, const BivariateSeries& g);

  // F(x_sub(z), y_sub(z)); both substitutions need zero constant term and
  // the result is exact to z^degree when degree(result) <= degree(this).
  TruncatedSeries substitute(const TruncatedSeries& x_sub,
                             const TruncatedSeries& y_sub) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  void require_same_degree(const BivariateSeries& g) const;

  std::size_t degree_;
  std::vector<Rational> coeffs_;
};

BivariateSeries pow(const BivariateSeries& f, unsigned n);

// The tree-counting series F(x, y) of the D-regular tree: the unique solution
// of F = 1 + y - x + x F^(D-1), coefficient a_ij counting finite subtrees
// hanging from a fixed edge with i non-leaves and j leaves.
BivariateSeries parry_bivariate(unsigned tree_degree, Truncation t);

}  // namespace wreath

#endif  // WREATH_BIVARIATE_SERIES_HPP_
