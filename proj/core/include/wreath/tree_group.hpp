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

#ifndef WREATH_TREE_GROUP_HPP_
#define WREATH_TREE_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/series.hpp"
#include "wreath/word.hpp"

namespace wreath {

class UnsupportedSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// u = conjugator^{-1} * core * conjugator with core cyclically reduced (or a
// single torsion letter) and |u| = |core| + 2|conjugator|.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& u);

// True for nonempty words whose first letter is not the inverse of the last.
// Single torsion letters count as cyclically reduced here.
bool is_cyclically_reduced(const Word& u);

// Elements of finite order are exactly e' and conjugates of some b_j.
bool has_finite_order(const Word& u);

// Least cyclic rotation (in alphabet order) of the cyclic reduction of u:
// equal keys exactly for conjugate elements of L.
Word conjugacy_key_L(const Word& u);

// Index of the lexicographically least rotation of a cyclically reduced word.
std::size_t least_rotation(const Word& c);
Word rotate(const Word& c, std::size_t shift);

// Shortest period p with c = r^(|c|/p) as words; r is the primitive root.
std::size_t primitive_period(const Word& c);

// Number of cyclically reduced words of length k >= 1:
// (2M+N-1)^k + (-1)^k (M+N-1) + M. Requires 2M+N >= 2.
Integer cyc_reduced_count(const TreeGroupSpec& spec, unsigned k);

// Growth series of cyclically reduced words (constant term 0).
TruncatedSeries geocl_A_series(const TreeGroupSpec& spec, Truncation t);

// Positive cone of the left order on a free group: w > e iff the number of
// factors a_j a_i^{-1} (j > i) exceeds the number of factors a_j^{-1} a_i
// (j > i), or the counts tie and w ends with a positive letter.
bool sunic_positive(const Word& w);
// u < v iff e < u^{-1} v. Throws UnsupportedSpec when the spec has torsion.
bool sunic_less(const TreeGroupSpec& spec, const Word& u, const Word& v);

// Length of a shortest walk in the tree Cayley graph from e' through every
// vertex of `support` ending at `end`: 2 E(T) - |end|, T the subtree spanned
// by support, e' and end.
std::size_t steiner_walk_length(std::span<const Word> support, const Word& end);

// Vertices of the subtree spanned by the given vertices together with e'.
std::vector<Word> spanned_tree(std::span<const Word> vertices);

// All reduced words of length exactly k, in shortlex order.
std::vector<Word> words_of_length(const TreeGroupSpec& spec, unsigned k);

}  // namespace wreath

#endif  // WREATH_TREE_GROUP_HPP_
