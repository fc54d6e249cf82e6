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


#include <map>
#include <queue>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wreath/tree_group.hpp"
#include "wreath/word.hpp"

namespace wreath {
namespace {

using namespace wreath::testing;

Word w(std::initializer_list<Letter> letters) { return Word(letters); }

TEST(Word, FreeReduction) {
  EXPECT_EQ(w({a1(), A1()}), Word());
  EXPECT_EQ(w({b1(), b1()}), Word());
  EXPECT_EQ(w({a1(), b1(), b1(), a1()}), w({a1(), a1()}));
  EXPECT_EQ(w({a1(), b1(), b1(), a1()}).size(), 2u);
}

TEST(Word, MultiplyAndInverse) {
  EXPECT_EQ(w({a1()}) * w({A1()}), Word());
  EXPECT_EQ(inverse(w({a1(), b2()})), w({b2(), A1()}));
  EXPECT_EQ(w({b1(), a1()}) * w({A1(), b1()}), Word());
}

TEST(Word, ParseAndPrint) {
  const Word u = Word::parse("a1A2b1");
  EXPECT_EQ(u, w({a1(), A2(), b1()}));
  EXPECT_EQ(u.to_string(), "a1A2b1");
  EXPECT_EQ(Word().to_string(), "e");
  EXPECT_EQ(Word::parse("e"), Word());
  EXPECT_THROW(Word::parse("x7"), std::invalid_argument);
}

TEST(Word, ShortlexOrder) {
  EXPECT_LT(Word(), w({a1()}));
  EXPECT_LT(w({a1()}), w({A1()}));
  EXPECT_LT(w({A2()}), w({b1()}));
  EXPECT_LT(w({b2()}), w({a1(), a1()}));
}

TEST(Word, GroupAxiomsOnRandomWords) {
  std::mt19937_64 rng(21);
  const TreeGroupSpec spec{2, 2};
  for (int i = 0; i < 500; ++i) {
    const Word u = random_word(rng, spec, 6);
    const Word v = random_word(rng, spec, 6);
    const Word x = random_word(rng, spec, 6);
    ASSERT_EQ((u * v) * x, u * (v * x));
    ASSERT_EQ(u * inverse(u), Word());
    ASSERT_EQ(inverse(u * v), inverse(v) * inverse(u));
  }
}

TEST(CyclicReduction, Examples) {
  auto cr = cyclic_reduce(w({a1(), b1(), A1()}));
  EXPECT_EQ(cr.core, w({b1()}));
  EXPECT_EQ(cr.conjugator, w({A1()}));

  cr = cyclic_reduce(w({a1(), a2()}));
  EXPECT_EQ(cr.core, w({a1(), a2()}));
  EXPECT_EQ(cr.conjugator, Word());

  const Word u = w({A1(), a2(), a1(), a1()});
  cr = cyclic_reduce(u);
  EXPECT_EQ(cr.core, w({a2(), a1()}));
  EXPECT_EQ(cr.conjugator, w({a1()}));
  EXPECT_EQ(inverse(cr.conjugator) * cr.core * cr.conjugator, u);
}

TEST(CyclicReduction, RandomRoundTrip) {
  std::mt19937_64 rng(22);
  for (const TreeGroupSpec spec : {TreeGroupSpec{2, 0}, TreeGroupSpec{1, 2}}) {
    for (int i = 0; i < 500; ++i) {
      const Word u = random_word(rng, spec, 10);
      if (u.empty()) continue;
      const auto cr = cyclic_reduce(u);
      ASSERT_EQ(inverse(cr.conjugator) * cr.core * cr.conjugator, u);
      ASSERT_EQ(u.size(), cr.core.size() + 2 * cr.conjugator.size());
      ASSERT_TRUE(is_cyclically_reduced(cr.core));
    }
  }
}

TEST(ConjugacyKeyL, Examples) {
  EXPECT_EQ(conjugacy_key_L(w({a1(), a2()})), conjugacy_key_L(w({a2(), a1()})));
  EXPECT_EQ(conjugacy_key_L(w({a1(), b1(), A1()})), w({b1()}));
  EXPECT_EQ(conjugacy_key_L(w({b1()})), w({b1()}));
  EXPECT_NE(conjugacy_key_L(w({a1()})), conjugacy_key_L(w({A1()})));
}

TEST(ConjugacyKeyL, InvariantUnderConjugation) {
  std::mt19937_64 rng(23);
  const TreeGroupSpec spec{2, 1};
  for (int i = 0; i < 500; ++i) {
    const Word u = random_word(rng, spec, 8);
    const Word g = random_word(rng, spec, 5);
    ASSERT_EQ(conjugacy_key_L(u), conjugacy_key_L(inverse(g) * u * g));
  }
}

TEST(Periods, LeastRotationAndPrimitiveRoot) {
  const Word c = w({a2(), a1(), a2(), a1()});
  EXPECT_EQ(rotate(c, least_rotation(c)), w({a1(), a2(), a1(), a2()}));
  EXPECT_EQ(primitive_period(c), 2u);
  EXPECT_EQ(primitive_period(w({a1(), a1(), a2()})), 3u);
  EXPECT_EQ(primitive_period(w({a1(), a1(), a1()})), 1u);
}

TEST(FiniteOrder, TorsionElements) {
  EXPECT_TRUE(has_finite_order(Word()));
  EXPECT_TRUE(has_finite_order(w({a1(), b2(), A1()})));
  EXPECT_FALSE(has_finite_order(w({b1(), b2()})));
  EXPECT_FALSE(has_finite_order(w({a1()})));
}

// Infinite-order cyclically reduced words of length k, by enumeration.
long count_cyclically_reduced(const TreeGroupSpec& spec, unsigned k) {
  long n = 0;
  for (const Word& u : words_of_length(spec, k)) {
    if (is_cyclically_reduced(u) && !has_finite_order(u)) ++n;
  }
  return n;
}

TEST(CyclicallyReducedCount, Examples) {
  EXPECT_EQ(cyc_reduced_count({1, 0}, 1), 2);
  EXPECT_EQ(cyc_reduced_count({0, 2}, 1), 0);
  EXPECT_EQ(cyc_reduced_count({0, 2}, 2), 2);
  EXPECT_THROW(cyc_reduced_count({0, 1}, 1), UnsupportedSpec);
}

TEST(CyclicallyReducedCount, MatchesEnumeration) {
  for (const TreeGroupSpec spec :
       {TreeGroupSpec{1, 0}, TreeGroupSpec{0, 3}, TreeGroupSpec{1, 1},
        TreeGroupSpec{2, 0}}) {
    for (unsigned k = 1; k <= 8; ++k) {
      EXPECT_EQ(cyc_reduced_count(spec, k), count_cyclically_reduced(spec, k))
          << "M=" << spec.free_rank << " N=" << spec.torsion_count << " k=" << k;
    }
  }
}

TEST(CyclicallyReducedCount, Series) {
  EXPECT_EQ(integer_coeffs(geocl_A_series({1, 0}, Truncation{5})),
            (std::vector<long>{0, 2, 2, 2, 2, 2}));
  EXPECT_EQ(integer_coeffs(geocl_A_series({0, 2}, Truncation{5})),
            (std::vector<long>{0, 0, 2, 0, 2, 0}));
  EXPECT_EQ(integer_coeffs(geocl_A_series({1, 1}, Truncation{1})),
            (std::vector<long>{0, 2}));
}

TEST(WordsOfLength, CountsAndOrder) {
  const TreeGroupSpec spec{1, 2};
  for (unsigned k = 1; k <= 6; ++k) {
    const auto words = words_of_length(spec, k);
    long expected = 4;
    for (unsigned i = 1; i < k; ++i) expected *= 3;
    EXPECT_EQ(static_cast<long>(words.size()), expected);
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
  }
}

TEST(SunicOrder, Examples) {
  const TreeGroupSpec f1{1, 0};
  EXPECT_TRUE(sunic_less(f1, Word(), w({a1()})));
  EXPECT_FALSE(sunic_less(f1, Word(), w({A1()})));
  EXPECT_THROW(sunic_less({1, 1}, Word(), w({a1()})), UnsupportedSpec);
}

TEST(SunicOrder, TotalLeftInvariantOnBall) {
  const TreeGroupSpec spec{2, 0};
  std::vector<Word> ball{Word()};
  for (unsigned k = 1; k <= 3; ++k) {
    for (const Word& u : words_of_length(spec, k)) ball.push_back(u);
  }
  for (const Word& u : ball) {
    ASSERT_FALSE(sunic_less(spec, u, u));
    for (const Word& v : ball) {
      if (u == v) continue;
      ASSERT_NE(sunic_less(spec, u, v), sunic_less(spec, v, u));
    }
  }
  std::mt19937_64 rng(24);
  for (int i = 0; i < 3000; ++i) {
    const Word g = random_word(rng, spec, 6);
    const Word u = random_word(rng, spec, 6);
    const Word v = random_word(rng, spec, 6);
    const Word x = random_word(rng, spec, 6);
    ASSERT_EQ(sunic_less(spec, u, v), sunic_less(spec, g * u, g * v));
    if (sunic_less(spec, u, v) && sunic_less(spec, v, x)) {
      ASSERT_TRUE(sunic_less(spec, u, x));
    }
  }
}

// Shortest walk from e' visiting `support` and ending at `end`, by
// breadth-first search over (position, visited subset) restricted to the
// ball of the given radius.
std::size_t exhaustive_walk_length(const TreeGroupSpec& spec,
                                   const std::vector<Word>& support,
                                   const Word& end, std::size_t radius) {
  const auto letters = alphabet(spec);
  using State = std::pair<Word, unsigned>;
  auto mark = [&support](const Word& at, unsigned seen) {
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (support[i] == at) seen |= 1u << i;
    }
    return seen;
  };
  const unsigned full = (1u << support.size()) - 1;
  std::map<State, std::size_t> dist;
  std::queue<State> q;
  const State start{Word(), mark(Word(), 0)};
  dist[start] = 0;
  q.push(start);
  while (!q.empty()) {
    const State s = q.front();
    q.pop();
    if (s.first == end && s.second == full) return dist[s];
    for (const Letter l : letters) {
      const Word next = s.first * Word({l});
      if (next.size() > radius) continue;
      const State t{next, mark(next, s.second)};
      if (dist.emplace(t, dist[s] + 1).second) q.push(t);
    }
  }
  return static_cast<std::size_t>(-1);
}

TEST(SteinerWalk, Examples) {
  EXPECT_EQ(steiner_walk_length({}, w({a1(), a1()})), 2u);
  const std::vector<Word> s1{w({A1()})};
  EXPECT_EQ(steiner_walk_length(s1, w({a1()})), 3u);
  const std::vector<Word> s2{w({b1()})};
  EXPECT_EQ(steiner_walk_length(s2, Word()), 2u);
  EXPECT_EQ(exhaustive_walk_length({1, 0}, s1, w({a1()}), 5), 3u);
}

TEST(SteinerWalk, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(25);
  for (const TreeGroupSpec spec : {TreeGroupSpec{1, 1}, TreeGroupSpec{2, 0}}) {
    for (int i = 0; i < 60; ++i) {
      std::vector<Word> support;
      const int n = static_cast<int>(rng() % 3) + 1;
      for (int j = 0; j < n; ++j) support.push_back(random_word(rng, spec, 2));
      const Word end = random_word(rng, spec, 2);
      ASSERT_EQ(steiner_walk_length(support, end),
                exhaustive_walk_length(spec, support, end, 3));
    }
  }
}

TEST(SpannedTree, ContainsPathsToOrigin) {
  const std::vector<Word> vs{w({a1(), b1()}), w({A1()})};
  const auto tree = spanned_tree(vs);
  const std::set<Word> got(tree.begin(), tree.end());
  EXPECT_EQ(got, (std::set<Word>{Word(), w({a1()}), w({a1(), b1()}), w({A1()})}));
}

}  // namespace
}  // namespace wreath
