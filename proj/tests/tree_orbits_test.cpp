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
#include <set>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.hpp"
#include "wreath/tree_group.hpp"
#include "wreath/tree_orbits.hpp"

namespace wreath {
namespace {

using namespace wreath::testing;

Word w(std::initializer_list<Letter> letters) { return Word(letters); }

// Orbit canonical form computed from scratch: the least sorted translate
// s^-1 S over s in S.
std::vector<Word> naive_canonical(const std::vector<Word>& tree) {
  std::vector<Word> best;
  for (const Word& s : tree) {
    std::vector<Word> moved;
    for (const Word& v : tree) moved.push_back(inverse(s) * v);
    std::sort(moved.begin(), moved.end());
    if (best.empty() || moved < best) best = moved;
  }
  return best;
}

bool naive_symmetric(const std::vector<Word>& tree) {
  const std::set<Word> members(tree.begin(), tree.end());
  for (const Word& g : tree) {
    if (g.empty()) continue;
    bool fixes = true;
    for (const Word& v : tree) fixes = fixes && members.contains(g * v);
    if (fixes) return true;
  }
  return false;
}

TEST(TreeOrbits, LineGraph) {
  auto reps = tree_orbit_representatives({1, 0}, 1);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].vertices, std::vector<Word>{Word()});
  EXPECT_EQ(reps[1].edge_count(), 1u);
  EXPECT_FALSE(reps[1].is_symmetric());

  reps = tree_orbit_representatives({1, 0}, 2);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps[2].edge_count(), 2u);
  EXPECT_EQ(reps[2].leaf_count, 2u);
  EXPECT_EQ(reps[2].nonleaf_count, 1u);
}

TEST(TreeOrbits, SingleEdgesOverTorsion) {
  const auto reps = tree_orbit_representatives({0, 2}, 1);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps[1].vertices, (std::vector<Word>{Word(), w({b1()})}));
  EXPECT_EQ(reps[2].vertices, (std::vector<Word>{Word(), w({b2()})}));
  for (std::size_t i = 1; i < 3; ++i) {
    ASSERT_TRUE(reps[i].is_symmetric());
    const TreeSymmetry& sym = *reps[i].symmetry;
    EXPECT_EQ(sym.half, std::vector<Word>{Word()});
    EXPECT_EQ(sym.junction, Word());
    EXPECT_EQ(sym.torsion_index, static_cast<int>(i));
    EXPECT_EQ(reps[i].leaf_count, 2u);
  }
}

TEST(TreeOrbits, MatchNaiveEnumeration) {
  for (const TreeGroupSpec spec :
       {TreeGroupSpec{1, 0}, TreeGroupSpec{2, 0}, TreeGroupSpec{0, 2},
        TreeGroupSpec{0, 3}, TreeGroupSpec{1, 1}}) {
    const std::size_t max_edges = spec.tree_degree() >= 4 ? 4 : 6;
    std::set<std::vector<Word>> orbits;
    for_each_rooted_subtree(spec, max_edges, [&orbits](const std::vector<Word>& t) {
      orbits.insert(naive_canonical(t));
    });
    const auto reps = tree_orbit_representatives(spec, max_edges);
    ASSERT_EQ(reps.size(), orbits.size())
        << "M=" << spec.free_rank << " N=" << spec.torsion_count;
    std::set<std::vector<Word>> got;
    for (const TreeOrbitRep& r : reps) {
      ASSERT_TRUE(std::find(r.vertices.begin(), r.vertices.end(), Word()) !=
                  r.vertices.end());
      got.insert(naive_canonical(r.vertices));
      ASSERT_EQ(r.is_symmetric(), naive_symmetric(r.vertices));
      const auto [leaves, nonleaves] = leaf_nonleaf_counts(r.vertices);
      ASSERT_EQ(r.leaf_count, leaves);
      ASSERT_EQ(r.nonleaf_count, nonleaves);
      ASSERT_EQ(r.leaf_count + r.nonleaf_count, r.vertices.size());
      ASSERT_EQ(spanned_tree(r.vertices).size(), r.vertices.size());
    }
    EXPECT_EQ(got, orbits);
  }
}

TEST(TreeOrbits, FreeGroupsHaveNoSymmetricTrees) {
  for (const TreeOrbitRep& r : tree_orbit_representatives({2, 0}, 4)) {
    EXPECT_FALSE(r.is_symmetric());
  }
}

TEST(TreeOrbits, SymmetricDecomposition) {
  for (const TreeGroupSpec spec : {TreeGroupSpec{0, 3}, TreeGroupSpec{1, 1}}) {
    for (const TreeOrbitRep& r : tree_orbit_representatives(spec, 5)) {
      if (!r.is_symmetric()) continue;
      const TreeSymmetry& sym = *r.symmetry;
      const Word b = Word({Letter::b(sym.torsion_index)});
      EXPECT_EQ(sym.reflection, sym.junction * b * inverse(sym.junction));
      std::vector<Word> both = sym.half;
      for (const Word& v : sym.half) both.push_back(sym.reflection * v);
      std::sort(both.begin(), both.end());
      EXPECT_EQ(both, r.vertices);
      EXPECT_EQ(2 * sym.half.size(), r.vertices.size());
      EXPECT_TRUE(std::find(sym.half.begin(), sym.half.end(), sym.junction) !=
                  sym.half.end());
    }
  }
}

// Leaves/non-leaves of L' = L1 ⊔ g L1 in terms of L1 and the valence of the
// junction inside L1.
TEST(TreeOrbits, GeneralizedLeafIdentity) {
  std::size_t checked = 0;
  for (const TreeGroupSpec spec :
       {TreeGroupSpec{0, 2}, TreeGroupSpec{0, 3}, TreeGroupSpec{1, 1}}) {
    for (const TreeOrbitRep& r : tree_orbit_representatives(spec, 5)) {
      if (!r.is_symmetric()) continue;
      const TreeSymmetry& sym = *r.symmetry;
      const std::size_t junction_leaf = sym.junction_half_degree == 1 ? 1 : 0;
      EXPECT_EQ(r.leaf_count, 2 * (sym.half_leaf_count - junction_leaf));
      EXPECT_EQ(r.nonleaf_count, 2 * (sym.half_nonleaf_count + junction_leaf));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(TreeOrbits, LeafIdentityNeedsJunctionLeaf) {
  const std::vector<Word> tree{Word(), w({a1()}), w({A1()}), w({b1()}),
                               w({b1(), a1()}), w({b1(), A1()})};
  const TreeOrbitRep r = classify_tree(tree);
  ASSERT_TRUE(r.is_symmetric());
  const TreeSymmetry& sym = *r.symmetry;
  EXPECT_EQ(sym.half, (std::vector<Word>{Word(), w({a1()}), w({A1()})}));
  EXPECT_EQ(sym.junction, Word());
  EXPECT_EQ(sym.half_leaf_count, 2u);
  EXPECT_EQ(sym.junction_half_degree, 2u);
  EXPECT_EQ(r.leaf_count, 4u);
  EXPECT_NE(r.leaf_count, 2 * (sym.half_leaf_count - 1));
}

TEST(TreeOrbits, LeastTranslate) {
  const std::vector<Word> tree{Word(), w({a1()})};
  EXPECT_EQ(least_translate(tree), tree);
  const std::vector<Word> shifted{w({a1()}), w({a1(), a1()})};
  EXPECT_EQ(least_translate(shifted), tree);
}

TEST(TreeOrbits, CountsBelowFourEdgesOnTheLine) {
  const auto reps = tree_orbit_representatives({1, 0}, 4);
  ASSERT_EQ(reps.size(), 5u);
  for (std::size_t e = 0; e <= 4; ++e) EXPECT_EQ(reps[e].edge_count(), e);
}

TEST(TreeOrbits, JsonDump) {
  const auto reps = tree_orbit_representatives({0, 2}, 1);
  const auto j = nlohmann::json::parse(trees_to_json(reps));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["vertices"], nlohmann::json::array({"e", "b1"}));
}

}  // namespace
}  // namespace wreath
