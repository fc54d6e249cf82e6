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

#ifndef WREATH_TESTS_TEST_SUPPORT_HPP_
#define WREATH_TESTS_TEST_SUPPORT_HPP_

#include <initializer_list>
#include <random>
#include <vector>

#include "wreath/series.hpp"
#include "wreath/tree_group.hpp"
#include "wreath/word.hpp"

namespace wreath::testing {

inline TruncatedSeries series(std::size_t degree,
                              std::initializer_list<long> coeffs) {
  TruncatedSeries f(Truncation{degree});
  std::size_t m = 0;
  for (long c : coeffs) {
    if (m > degree) break;
    f.set(m++, Rational(c));
  }
  return f;
}

inline std::vector<long> integer_coeffs(const TruncatedSeries& f) {
  std::vector<long> out;
  for (const Rational& c : f.coefficients()) {
    out.push_back(c.get_num().get_si() / c.get_den().get_si());
  }
  return out;
}

inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t degree,
                                     bool positive = false,
                                     bool zero_constant = false) {
  std::uniform_int_distribution<int> num(positive ? 0 : -5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  TruncatedSeries f(Truncation{degree});
  for (std::size_t m = zero_constant ? 1 : 0; m <= degree; ++m) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    f.set(m, c);
  }
  return f;
}

inline Word random_word(std::mt19937_64& rng, const TreeGroupSpec& spec,
                        std::size_t max_letters) {
  const auto letters = alphabet(spec);
  std::uniform_int_distribution<std::size_t> len(0, max_letters);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::vector<Letter> raw(len(rng));
  for (Letter& l : raw) l = letters[pick(rng)];
  return Word::reduce(raw);
}

inline Letter a1() { return Letter::a(1); }
inline Letter A1() { return Letter::a(1, -1); }
inline Letter a2() { return Letter::a(2); }
inline Letter A2() { return Letter::a(2, -1); }
inline Letter b1() { return Letter::b(1); }
inline Letter b2() { return Letter::b(2); }

}  // namespace wreath::testing

#endif  // WREATH_TESTS_TEST_SUPPORT_HPP_
