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

#include "wreath/conjugacy_key.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "wreath/tree_group.hpp"

namespace wreath {

namespace {

using Assignment = std::vector<std::pair<Word, int>>;

std::string render(const Assignment& a) {
  std::string out;
  for (const auto& [v, g] : a) {
    out += v.to_string();
    out += ':';
    out += std::to_string(g);
    out += ';';
  }
  return out;
}

// Least serialization of the map over the given translations v -> s^{-1} v.
std::string least_translate_key(const Assignment& a) {
  std::optional<std::string> best;
  for (const auto& [s, unused] : a) {
    const Word sinv = inverse(s);
    Assignment moved;
    moved.reserve(a.size());
    for (const auto& [v, g] : a) moved.emplace_back(sinv * v, g);
    std::sort(moved.begin(), moved.end());
    std::string text = render(moved);
    if (!best || text < *best) best = std::move(text);
  }
  return best.value_or(std::string());
}

ConjugacyKey trivial_cursor_key(const WreathGroup& group,
                                const WreathElement& p) {
  Assignment classes;
  for (const auto& [v, g] : p.support) {
    classes.emplace_back(v, group.lamp().class_key(g));
  }
  return {"E|" + least_translate_key(classes)};
}

ConjugacyKey torsion_cursor_key(const WreathGroup& group,
                                const WreathElement& p,
                                const CyclicReduction& cr) {
  // Bring the cursor to b_j; the centralizer {e', b_j} fixes every coset.
  const WreathElement q = group.conj(p, inverse(cr.conjugator));
  const Letter bj = cr.core.front();
  const Word bw({bj});
  std::map<Word, int> product;
  for (const auto& [v, g] : q.support) {
    const bool flipped = !v.empty() && v.front() == bj;
    const Word t = flipped ? v.suffix_from(1) : v;
    product.emplace(t, 0);
  }
  const FiniteGroupTable& lamp = group.lamp();
  Assignment values;
  for (auto& [t, unused] : product) {
    const int g = lamp.mul(q.lamp_at(t, lamp.identity()),
                           q.lamp_at(bw * t, lamp.identity()));
    const int cls = lamp.class_key(g);
    if (cls != lamp.class_key(lamp.identity())) values.emplace_back(t, cls);
  }
  return {"B|" + std::to_string(bj.index()) + "|" + render(values)};
}

ConjugacyKey infinite_cursor_key(const WreathGroup& group,
                                 const WreathElement& p,
                                 const CyclicReduction& cr) {
  const std::size_t shift = least_rotation(cr.core);
  const Word d = inverse(cr.conjugator) * cr.core.prefix(shift);
  const WreathElement q = group.conj(p, d);
  const Word& c = q.cursor;
  const Word root = c.prefix(primitive_period(c));
  const std::size_t periods = c.size() / root.size();
  const Assignment proj = coset_projections(group, q);
  std::optional<std::string> best;
  Word translate;  // r^{-j}
  const Word root_inv = inverse(root);
  for (std::size_t j = 0; j < periods; ++j) {
    Assignment moved;
    for (const auto& [t, g] : proj) {
      moved.emplace_back(coset_of(c, translate * t).first, g);
    }
    std::sort(moved.begin(), moved.end());
    std::string text = render(moved);
    if (!best || text < *best) best = std::move(text);
    translate = root_inv * translate;
  }
  return {"A|" + c.to_string() + "|" + *best};
}

}  // namespace

std::pair<Word, long> coset_of(const Word& c, const Word& l) {
  const long bound =
      static_cast<long>(2 * l.size() / c.size()) + 1;
  const Word cinv = inverse(c);
  Word best = l;
  long best_k = 0;
  Word up = l;
  Word down = l;
  for (long n = 1; n <= bound; ++n) {
    up = c * up;
    down = cinv * down;
    if (up < best) {
      best = up;
      best_k = n;
    }
    if (down < best) {
      best = down;
      best_k = -n;
    }
  }
  return {best, best_k};
}

std::vector<std::pair<Word, int>> coset_projections(const WreathGroup& group,
                                                    const WreathElement& p) {
  const Word& c = p.cursor;
  // coset rep -> (k -> lamp); the product runs over k ascending.
  std::map<Word, std::map<long, int>> cosets;
  for (const auto& [v, g] : p.support) {
    auto [t, k] = coset_of(c, v);
    cosets[t][k] = g;
  }
  const FiniteGroupTable& lamp = group.lamp();
  Assignment out;
  for (const auto& [t, row] : cosets) {
    int acc = lamp.identity();
    for (const auto& [k, g] : row) acc = lamp.mul(acc, g);
    if (acc != lamp.identity()) out.emplace_back(t, acc);
  }
  return out;
}

ConjugacyKey key_of(const WreathGroup& group, const WreathElement& p) {
  if (p.cursor.empty()) return trivial_cursor_key(group, p);
  const CyclicReduction cr = cyclic_reduce(p.cursor);
  if (cr.core.size() == 1 && cr.core.front().is_torsion()) {
    return torsion_cursor_key(group, p, cr);
  }
  return infinite_cursor_key(group, p, cr);
}

}  // namespace wreath
