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

#ifndef WREATH_CONJUGACY_KEY_HPP_
#define WREATH_CONJUGACY_KEY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "wreath/wreath_element.hpp"

namespace wreath {

// Complete conjugacy invariant of G wr L: equal keys exactly for conjugate
// elements. `text` is a readable canonical serialization.
struct ConjugacyKey {
  std::string text;
  friend bool operator==(const ConjugacyKey&, const ConjugacyKey&) = default;
  friend auto operator<=>(const ConjugacyKey&, const ConjugacyKey&) = default;
};

ConjugacyKey key_of(const WreathGroup& group, const WreathElement& p);

// Right coset <c>l of a cyclically reduced c of infinite order:
// returns (t, k) with t the shortlex-least element of the coset and
// l = c^{-k} t.
std::pair<Word, long> coset_of(const Word& c, const Word& l);

// Coset projections pi_{<c>t}(eta) for an infinite-order cursor c, keyed by
// the shortlex-least coset element; identity products are dropped.
std::vector<std::pair<Word, int>> coset_projections(const WreathGroup& group,
                                                    const WreathElement& p);

}  // namespace wreath

#endif  // WREATH_CONJUGACY_KEY_HPP_
