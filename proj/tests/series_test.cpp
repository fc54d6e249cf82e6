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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wreath/bivariate_series.hpp"
#include "wreath/series.hpp"
#include "wreath/tree_group.hpp"
#include "wreath/tree_orbits.hpp"

namespace wreath {
namespace {

using testing::integer_coeffs;
using testing::random_series;
using testing::series;

TEST(SeriesArithmetic, AddExamples) {
  EXPECT_EQ(series(3, {1, 1}) + series(3, {1, 1}), series(3, {2, 2}));
  const TruncatedSeries f = series(3, {4, -1, 0, 7});
  EXPECT_EQ(f + TruncatedSeries::zero(Truncation{3}), f);
  EXPECT_EQ(series(3, {1, -1}) + series(3, {0, 1, 1}), series(3, {1, 0, 1}));
}

TEST(SeriesArithmetic, MulExamples) {
  EXPECT_EQ(series(4, {1, 1}) * series(4, {1, 1}), series(4, {1, 2, 1}));
  const TruncatedSeries f = series(4, {3, 0, -2, 1, 5});
  EXPECT_EQ(f * TruncatedSeries::one(Truncation{4}), f);
  const Truncation t{10};
  EXPECT_EQ(series(10, {1, -1}) * TruncatedSeries::geometric(t),
            TruncatedSeries::one(t));
}

TEST(SeriesArithmetic, DegreeMismatchThrows) {
  try {
    (void)(series(3, {1}) + series(4, {1}));
    FAIL() << "expected SeriesError";
  } catch (const SeriesError& e) {
    EXPECT_EQ(e.code(), SeriesErrc::kDegreeMismatch);
  }
  EXPECT_THROW((void)(series(3, {1}) * series(2, {1})), SeriesError);
}

TEST(SeriesArithmetic, SubstitutePowerExamples) {
  EXPECT_EQ(substitute_power(series(4, {1, 1, 1}), 2), series(4, {1, 0, 1, 0, 1}));
  const TruncatedSeries f = series(6, {2, -1, 3, 0, 0, 4, 1});
  EXPECT_EQ(substitute_power(f, 1), f);
  EXPECT_EQ(substitute_power(series(6, {0, 1, 1}), 3),
            series(6, {0, 0, 0, 1, 0, 0, 1}));
}

TEST(SeriesArithmetic, ComposeExamples) {
  const Truncation t{8};
  TruncatedSeries evens(t);
  for (std::size_t m = 0; m <= 8; m += 2) evens.set(m, 1);
  EXPECT_EQ(compose(TruncatedSeries::geometric(t), series(8, {0, 0, 1})), evens);
  const TruncatedSeries f = series(8, {1, -2, 0, 3});
  EXPECT_EQ(compose(f, series(8, {0, 1})), f);
  EXPECT_EQ(compose(series(8, {1, 1, 1}), series(8, {0, 1, 1})),
            series(8, {1, 1, 2, 2, 1}));
}

TEST(SeriesArithmetic, ComposeRejectsConstantTerm) {
  EXPECT_THROW(compose(series(3, {1, 1}), series(3, {1, 1})), SeriesError);
}

TEST(SeriesArithmetic, ReciprocalExamples) {
  const Truncation t{9};
  EXPECT_EQ(reciprocal(series(9, {1, -1})), TruncatedSeries::geometric(t));
  EXPECT_EQ(reciprocal(TruncatedSeries::one(t)), TruncatedSeries::one(t));
  const TruncatedSeries f = series(9, {1, 0, -1, -1});
  const TruncatedSeries inv = reciprocal(f);
  EXPECT_EQ(integer_coeffs(inv).at(0), 1);
  EXPECT_EQ(integer_coeffs(inv).at(1), 0);
  EXPECT_EQ(integer_coeffs(inv).at(2), 1);
  EXPECT_EQ(integer_coeffs(inv).at(3), 1);
  EXPECT_EQ(integer_coeffs(inv).at(4), 1);
  EXPECT_EQ(integer_coeffs(inv).at(5), 2);
  EXPECT_EQ(f * inv, TruncatedSeries::one(t));
}

TEST(SeriesArithmetic, ReciprocalOfNonUnitThrows) {
  EXPECT_THROW(reciprocal(series(3, {0, 1})), SeriesError);
}

TEST(SeriesArithmetic, JsonRoundTrip) {
  TruncatedSeries f(Truncation{3});
  f.set(0, 1);
  f.set(1, Rational(-3, 4));
  f.set(3, Rational(7, 2));
  EXPECT_EQ(TruncatedSeries::from_json(f.to_json()), f);
  EXPECT_EQ(f.to_json(), R"({"degree":3,"coeffs":["1","-3/4","0","7/2"]})");
  EXPECT_THROW(TruncatedSeries::from_json("{\"degree\":1}"), SeriesError);
}

TEST(SeriesProperties, RingLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t d = 1 + i % 9;
    const TruncatedSeries f = random_series(rng, d);
    const TruncatedSeries g = random_series(rng, d);
    const TruncatedSeries h = random_series(rng, d);
    ASSERT_EQ(f + g, g + f);
    ASSERT_EQ((f + g) + h, f + (g + h));
    ASSERT_EQ(f * g, g * f);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_TRUE((f - f).is_zero());
  }
}

TEST(SeriesProperties, ReciprocalRoundTrip) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    TruncatedSeries f = random_series(rng, 1 + i % 12);
    if (f[0] == 0) f.set(0, 1);
    ASSERT_EQ(f * reciprocal(f), TruncatedSeries::one(f.truncation()));
  }
}

TEST(SeriesProperties, ComposeIsHomomorphism) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 8;
    const TruncatedSeries f = random_series(rng, d);
    const TruncatedSeries g = random_series(rng, d);
    const TruncatedSeries h = random_series(rng, d, false, true);
    ASSERT_EQ(compose(f + g, h), compose(f, h) + compose(g, h));
    ASSERT_EQ(compose(f * g, h), compose(f, h) * compose(g, h));
  }
}

TEST(SeriesProperties, SubstitutePowerComposes) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const TruncatedSeries f = random_series(rng, 24);
    const unsigned a = 1 + i % 4;
    const unsigned b = 1 + (i / 4) % 3;
    ASSERT_EQ(substitute_power(substitute_power(f, a), b), substitute_power(f, a * b));
    ASSERT_EQ(substitute_power(f, a),
              compose(f, TruncatedSeries::monomial(f.truncation(), a)));
  }
}

TEST(ParryFixedPoint, SmallDegreeClosedForms) {
  std::mt19937_64 rng(15);
  const Truncation t{16};
  for (int i = 0; i < 20; ++i) {
    const TruncatedSeries x = random_series(rng, 16, true, true);
    const TruncatedSeries y = random_series(rng, 16, true, true);
    EXPECT_EQ(parry_fixed_point(1, x, y), TruncatedSeries::one(t) + y);
    EXPECT_EQ(parry_fixed_point(2, x, y),
              TruncatedSeries::one(t) + y * reciprocal(TruncatedSeries::one(t) - x));
  }
  const TruncatedSeries zero = TruncatedSeries::zero(t);
  for (unsigned d = 1; d <= 5; ++d) {
    EXPECT_EQ(parry_fixed_point(d, zero, zero), TruncatedSeries::one(t));
  }
}

TEST(ParryFixedPoint, ResidualVanishes) {
  std::mt19937_64 rng(16);
  for (unsigned d : {2u, 3u, 4u}) {
    for (int i = 0; i < 3; ++i) {
      const TruncatedSeries x = random_series(rng, 64, true, true);
      const TruncatedSeries y = random_series(rng, 64, true, true);
      const TruncatedSeries g = parry_fixed_point(d, x, y);
      const TruncatedSeries rhs =
          TruncatedSeries::one(g.truncation()) + y - x + x * pow(g, d - 1);
      EXPECT_TRUE((g - rhs).is_zero()) << "D = " << d;
    }
  }
}

TEST(ParryFixedPoint, RejectsConstantTerms) {
  const TruncatedSeries x = series(4, {1, 1});
  const TruncatedSeries y = series(4, {0, 1});
  EXPECT_THROW(parry_fixed_point(3, x, y), SeriesError);
  EXPECT_THROW(parry_fixed_point(3, y, x), SeriesError);
}

// Subtrees hanging below the edge {e', a1} of the Cayley tree of L, with the
// vertex set enumerated explicitly: a_ij counts those with i non-leaves and
// j leaves (e' itself excluded).
TEST(ParryBivariate, MatchesExplicitSubtreeCount) {
  const std::size_t degree = 6;
  for (const TreeGroupSpec spec : {TreeGroupSpec{1, 1}, TreeGroupSpec{2, 0},
                                   TreeGroupSpec{0, 4}, TreeGroupSpec{1, 0}}) {
    const Letter first = alphabet(spec).front();
    std::map<std::pair<std::size_t, std::size_t>, long> counts;
    for_each_rooted_subtree(
        spec, degree,
        [&counts](const std::vector<Word>& vertices) {
          if (vertices.size() == 1) {
            ++counts[{0, 0}];
            return;
          }
          const auto [leaves, nonleaves] = leaf_nonleaf_counts(vertices);
          ++counts[{nonleaves, leaves - 1}];
        },
        [first](const Word& v) { return v.front() == first; });
    const BivariateSeries f =
        parry_bivariate(static_cast<unsigned>(spec.tree_degree()), Truncation{degree});
    for (std::size_t i = 0; i <= degree; ++i) {
      for (std::size_t j = 0; i + j <= degree; ++j) {
        const auto it = counts.find({i, j});
        const long expected = it == counts.end() ? 0 : it->second;
        EXPECT_EQ(f.coeff(i, j), Rational(expected))
            << "D=" << spec.tree_degree() << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(ParryBivariate, SubstitutionAgreesWithFixedPoint) {
  std::mt19937_64 rng(17);
  const Truncation t{12};
  for (unsigned d : {2u, 3u, 5u}) {
    const TruncatedSeries x = random_series(rng, 12, true, true);
    const TruncatedSeries y = random_series(rng, 12, true, true);
    EXPECT_EQ(parry_bivariate(d, t).substitute(x, y), parry_fixed_point(d, x, y));
  }
}

TEST(UnitRoot, Examples) {
  const Truncation t{4};
  EXPECT_NEAR(find_unit_root(TruncatedSeries::monomial(t, 1)), 1.0, 1e-10);
  EXPECT_NEAR(find_unit_root(TruncatedSeries::monomial(t, 1, 2)), 0.5, 1e-10);
  EXPECT_NEAR(find_unit_root(series(4, {0, 1, 1})), (std::sqrt(5.0) - 1) / 2, 1e-10);
}

TEST(UnitRoot, NotBracketedThrows) {
  try {
    find_unit_root(TruncatedSeries::monomial(Truncation{4}, 4, Rational(1, 1000)));
    FAIL() << "expected SeriesError";
  } catch (const SeriesError& e) {
    EXPECT_EQ(e.code(), SeriesErrc::kRootNotBracketed);
  }
}

TEST(RootTest, Examples) {
  const Truncation t{40};
  EXPECT_NEAR(root_test_estimate(TruncatedSeries::geometric(t, 2), 10), 0.5, 1e-12);
  EXPECT_NEAR(root_test_estimate(TruncatedSeries::geometric(t), 10), 1.0, 1e-12);
  EXPECT_THROW(root_test_estimate(TruncatedSeries::zero(t), 10), SeriesError);
}

TEST(RootTest, ExtrapolatedRemovesPolynomialPrefactor) {
  // a_m = m^3 2^m / 7 has radius 1/2 while the plain test is visibly biased.
  const Truncation t{60};
  TruncatedSeries f(t);
  for (std::size_t m = 1; m <= 60; ++m) {
    f.set(m, Rational(Integer(m * m * m) * (Integer(1) << static_cast<unsigned>(m)), 7));
  }
  EXPECT_GT(std::fabs(root_test_estimate(f, 10) - 0.5), 0.01);
  EXPECT_NEAR(root_test_extrapolated(f, 10), 0.5, 1e-6);
}

}  // namespace
}  // namespace wreath
