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

#ifndef WREATH_WREATH_ELEMENT_HPP_
#define WREATH_WREATH_ELEMENT_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wreath/finite_group.hpp"
#include "wreath/word.hpp"

namespace wreath {

// (eta, b) in G wr L. `support` lists (vertex, lamp) with lamp != identity,
// sorted by vertex, so structural equality is group equality.
struct WreathElement {
  std::vector<std::pair<Word, int>> support;
  Word cursor;

  // Lamp at v, or `identity` when v is outside the support.
  int lamp_at(const Word& v, int identity) const;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

// G wr L for a finite lamp table and a tree base group.
class WreathGroup {
 public:
  WreathGroup(FiniteGroupTable lamp, TreeGroupSpec base);

  const FiniteGroupTable& lamp() const noexcept { return *lamp_; }
  const TreeGroupSpec& base() const noexcept { return base_; }

  WreathElement identity() const { return {}; }
  // (e, x) for x in X followed by (y at e', e') for y in Y.
  const std::vector<WreathElement>& generators() const noexcept {
    return generators_;
  }
  // Builds an element, dropping identity lamps and sorting.
  WreathElement make(std::vector<std::pair<Word, int>> lamps, Word cursor) const;

  // (eta, m)(theta, n) = (eta theta^m, mn) with theta^m(v) = theta(m^-1 v).
  WreathElement multiply(const WreathElement& p, const WreathElement& q) const;
  WreathElement invert(const WreathElement& p) const;
  // (e, d)^-1 p (e, d) = (eta^{d^-1}, d^-1 b d).
  WreathElement conj(const WreathElement& p, const Word& d) const;
  // q^-1 p q.
  WreathElement conj(const WreathElement& p, const WreathElement& q) const;

  // Right multiplication by the i-th generator, as used by ball search.
  WreathElement step(const WreathElement& p, std::size_t generator) const;

  // Minimal walk through the support ending at the cursor plus lamp lengths.
  std::size_t element_length(const WreathElement& p) const;

  // Compact byte serialization (injective).
  std::string serialize(const WreathElement& p) const;
  // Readable form "[a1:1, e:1] @ a1".
  std::string to_string(const WreathElement& p) const;

 private:
  std::shared_ptr<const FiniteGroupTable> lamp_;
  TreeGroupSpec base_;
  std::vector<WreathElement> generators_;
};

}  // namespace wreath

#endif  // WREATH_WREATH_ELEMENT_HPP_
