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

#include "wreath/tree_orbits.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "wreath/tree_group.hpp"

namespace wreath {

namespace {

Word parent_of(const Word& v) { return v.prefix(v.size() - 1); }

std::vector<Word> children_of(const TreeGroupSpec& spec, const Word& v) {
  std::vector<Word> out;
  for (Letter x : alphabet(spec)) {
    if (!v.empty() && v.back().inverse() == x) continue;
    out.push_back(Word::from_reduced_bytes(v.bytes() + static_cast<char>(x.code())));
  }
  return out;
}

void grow(const TreeGroupSpec& spec, std::vector<Word>& tree,
          const std::vector<Word>& frontier, std::size_t edges_left,
          const std::function<void(const std::vector<Word>&)>& visit,
          const std::function<bool(const Word&)>& admissible) {
  visit(tree);
  if (edges_left == 0) return;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Word& v = frontier[i];
    std::vector<Word> next(frontier.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           frontier.end());
    for (Word& c : children_of(spec, v)) {
      if (!admissible || admissible(c)) next.push_back(std::move(c));
    }
    tree.push_back(v);
    grow(spec, tree, next, edges_left - 1, visit, admissible);
    tree.pop_back();
  }
}

bool lex_less(const std::vector<Word>& a, const std::vector<Word>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::pair<std::size_t, std::size_t> leaf_nonleaf_counts(
    std::span<const Word> vertices) {
  std::unordered_map<Word, std::size_t> degree;
  for (const Word& v : vertices) degree.emplace(v, 0);
  for (const Word& v : vertices) {
    if (v.empty()) continue;
    auto it = degree.find(parent_of(v));
    if (it != degree.end()) {
      ++it->second;
      ++degree[v];
    }
  }
  std::size_t leaves = 0;
  for (const auto& [v, d] : degree) {
    if (d <= 1) ++leaves;
  }
  return {leaves, vertices.size() - leaves};
}

std::vector<Word> least_translate(std::span<const Word> vertices) {
  std::vector<Word> best;
  std::vector<Word> cand;
  for (const Word& s : vertices) {
    const Word sinv = inverse(s);
    cand.clear();
    for (const Word& v : vertices) cand.push_back(sinv * v);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || lex_less(cand, best)) best = cand;
  }
  return best;
}

void for_each_rooted_subtree(
    const TreeGroupSpec& spec, std::size_t max_edges,
    const std::function<void(const std::vector<Word>&)>& visit,
    const std::function<bool(const Word&)>& admissible) {
  spec.validate();
  std::vector<Word> tree{Word()};
  std::vector<Word> frontier;
  for (Word& c : children_of(spec, Word())) {
    if (!admissible || admissible(c)) frontier.push_back(std::move(c));
  }
  grow(spec, tree, frontier, max_edges, visit, admissible);
}

TreeOrbitRep classify_tree(std::vector<Word> vertices) {
  std::sort(vertices.begin(), vertices.end());
  TreeOrbitRep rep;
  std::tie(rep.leaf_count, rep.nonleaf_count) = leaf_nonleaf_counts(vertices);
  const std::unordered_set<Word> members(vertices.begin(), vertices.end());
  for (const Word& s : vertices) {
    if (s.empty()) continue;
    bool fixes = true;
    for (const Word& v : vertices) {
      if (!members.contains(s * v)) {
        fixes = false;
        break;
      }
    }
    if (!fixes) continue;
    // The stabilizer is finite, hence generated by a reflection h b_j h^-1.
    const CyclicReduction cr = cyclic_reduce(s);
    TreeSymmetry sym;
    sym.reflection = s;
    sym.torsion_index = cr.core.front().index();
    sym.junction = inverse(cr.conjugator);
    for (const Word& v : vertices) {
      const Word rel = inverse(sym.junction) * v;
      if (!rel.empty() && rel.front() == cr.core.front()) continue;
      sym.half.push_back(v);
    }
    std::sort(sym.half.begin(), sym.half.end());
    std::tie(sym.half_leaf_count, sym.half_nonleaf_count) =
        leaf_nonleaf_counts(sym.half);
    for (const Word& v : sym.half) {
      if (v == sym.junction) continue;
      const Word rel = inverse(sym.junction) * v;
      if (rel.size() == 1) ++sym.junction_half_degree;
    }
    rep.symmetry = std::move(sym);
    break;
  }
  rep.vertices = std::move(vertices);
  return rep;
}

std::vector<TreeOrbitRep> tree_orbit_representatives(const TreeGroupSpec& spec,
                                                     std::size_t max_edges) {
  spec.validate();
  std::vector<TreeOrbitRep> out;
  if (spec.torsion_count == 0) {
    for_each_rooted_subtree(
        spec, max_edges,
        [&out](const std::vector<Word>& tree) {
          out.push_back(classify_tree(tree));
        },
        [](const Word& v) { return sunic_positive(v); });
  } else {
    for_each_rooted_subtree(spec, max_edges, [&out](const std::vector<Word>& tree) {
      std::vector<Word> sorted = tree;
      std::sort(sorted.begin(), sorted.end());
      if (least_translate(sorted) == sorted) {
        out.push_back(classify_tree(std::move(sorted)));
      }
    });
  }
  std::sort(out.begin(), out.end(), [](const TreeOrbitRep& a, const TreeOrbitRep& b) {
    if (a.vertices.size() != b.vertices.size()) {
      return a.vertices.size() < b.vertices.size();
    }
    return lex_less(a.vertices, b.vertices);
  });
  return out;
}

std::string trees_to_json(std::span<const TreeOrbitRep> reps) {
  auto words = [](std::span<const Word> ws) {
    auto arr = nlohmann::ordered_json::array();
    for (const Word& w : ws) arr.push_back(w.to_string());
    return arr;
  };
  auto arr = nlohmann::ordered_json::array();
  for (const TreeOrbitRep& rep : reps) {
    nlohmann::ordered_json j;
    j["vertices"] = words(rep.vertices);
    j["edges"] = rep.edge_count();
    j["leaves"] = rep.leaf_count;
    j["nonleaves"] = rep.nonleaf_count;
    j["symmetric"] = rep.is_symmetric();
    if (rep.symmetry) {
      j["half"] = words(rep.symmetry->half);
      j["junction"] = rep.symmetry->junction.to_string();
      j["torsion_index"] = rep.symmetry->torsion_index;
      j["reflection"] = rep.symmetry->reflection.to_string();
    }
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

}  // namespace wreath
