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

#ifndef WREATH_TREE_ORBITS_HPP_
#define WREATH_TREE_ORBITS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wreath/word.hpp"

namespace wreath {

// Present when a finite subtree L' is fixed by the reflection g = h b_j h^-1.
// Then L' = half ⊔ g·half, `half` is the side containing e', `junction` (= h)
// is its endpoint of the edge {h, h b_j} that g flips.
struct TreeSymmetry {
  std::vector<Word> half;
  Word junction;
  int torsion_index = 0;
  Word reflection;
  std::size_t half_leaf_count = 0;
  std::size_t half_nonleaf_count = 0;
  // Degree of the junction inside `half` (0 only when half = {e'}).
  std::size_t junction_half_degree = 0;
};

// One left-translation orbit of finite subtrees of the Cayley graph of L.
// `vertices` is the canonical translate (contains e', sorted shortlex).
struct TreeOrbitRep {
  std::vector<Word> vertices;
  std::size_t leaf_count = 0;     // vertices of valence <= 1
  std::size_t nonleaf_count = 0;
  std::optional<TreeSymmetry> symmetry;

  std::size_t edge_count() const { return vertices.size() - 1; }
  bool is_symmetric() const { return symmetry.has_value(); }
};

// Leaves (valence <= 1) and non-leaves of a vertex set that spans a tree.
std::pair<std::size_t, std::size_t> leaf_nonleaf_counts(
    std::span<const Word> vertices);

// Least translate s^{-1}·S over s in S, compared as shortlex-sorted lists.
std::vector<Word> least_translate(std::span<const Word> vertices);

// Enumerates every subtree of the Cayley graph containing e' with at most
// max_edges edges, calling visit(vertices) once per subtree. When
// `admissible` is set, only vertices v != e' with admissible(v) may be used.
void for_each_rooted_subtree(
    const TreeGroupSpec& spec, std::size_t max_edges,
    const std::function<void(const std::vector<Word>&)>& visit,
    const std::function<bool(const Word&)>& admissible = {});

// One representative per orbit of finite subtrees containing e' with at most
// max_edges edges under left multiplication by L. For free L the
// representative is the translate whose vertices are all >= e' in the left
// order; with torsion it is the least translate in shortlex order. Output is
// sorted by (edge count, vertices).
std::vector<TreeOrbitRep> tree_orbit_representatives(const TreeGroupSpec& spec,
                                                     std::size_t max_edges);

// Builds the representative record (counts and symmetry) for a canonical
// vertex set.
TreeOrbitRep classify_tree(std::vector<Word> vertices);

// JSON array of representatives for the CLI.
std::string trees_to_json(std::span<const TreeOrbitRep> reps);

}  // namespace wreath

#endif  // WREATH_TREE_ORBITS_HPP_
