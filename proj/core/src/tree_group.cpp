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

#include "wreath/tree_group.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace wreath {

CyclicReduction cyclic_reduce(const Word& u) {
  std::size_t lo = 0;
  std::size_t hi = u.size();
  while (hi - lo >= 2 && u[lo].inverse() == u[hi - 1]) {
    ++lo;
    --hi;
  }
  // u = x core x^{-1} with x = u[0, lo); the conjugator is x^{-1}.
  return {u.prefix(hi).suffix_from(lo), inverse(u.prefix(lo))};
}

bool is_cyclically_reduced(const Word& u) {
  if (u.empty()) return false;
  if (u.size() == 1) return true;
  return u.front().inverse() != u.back();
}

bool has_finite_order(const Word& u) {
  const Word core = cyclic_reduce(u).core;
  return core.empty() || (core.size() == 1 && core.front().is_torsion());
}

Word rotate(const Word& c, std::size_t shift) {
  if (c.empty()) return c;
  shift %= c.size();
  return Word::from_reduced_bytes(c.bytes().substr(shift) +
                                  c.bytes().substr(0, shift));
}

std::size_t least_rotation(const Word& c) {
  const std::size_t n = c.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = c[(s + i) % n];
      const auto y = c[(best + i) % n];
      if (x != y) {
        if (x < y) best = s;
        break;
      }
    }
  }
  return best;
}

std::size_t primitive_period(const Word& c) {
  const std::size_t n = c.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = c[i] == c[i - p];
    if (ok) return p;
  }
  return n;
}

Word conjugacy_key_L(const Word& u) {
  const Word core = cyclic_reduce(u).core;
  return rotate(core, least_rotation(core));
}

Integer cyc_reduced_count(const TreeGroupSpec& spec, unsigned k) {
  spec.validate();
  const int d = spec.tree_degree();
  if (d < 2) {
    throw UnsupportedSpec("cyc_reduced_count: needs 2M+N >= 2");
  }
  if (k == 0) throw std::invalid_argument("cyc_reduced_count: k must be >= 1");
  Integer base = d - 1;
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  const int sign = (k % 2 == 0) ? 1 : -1;
  out += sign * (spec.free_rank + spec.torsion_count - 1);
  out += spec.free_rank;
  return out;
}

TruncatedSeries geocl_A_series(const TreeGroupSpec& spec, Truncation t) {
  spec.validate();
  const int d = spec.tree_degree();
  if (d < 2) throw UnsupportedSpec("geocl_A_series: needs 2M+N >= 2");
  // 1/(1-(D-1)z) + (D z^2 - (N-1) z - 1)/(1 - z^2)
  TruncatedSeries numer(t, {-1, -(spec.torsion_count - 1), d});
  TruncatedSeries denom(t, {1, 0, -1});
  return TruncatedSeries::geometric(t, d - 1) + numer * reciprocal(denom);
}

bool sunic_positive(const Word& w) {
  if (w.empty()) return false;
  long up = 0;    // a_j a_i^{-1}, j > i
  long down = 0;  // a_j^{-1} a_i, j > i
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const Letter x = w[k];
    const Letter y = w[k + 1];
    if (x.is_torsion() || y.is_torsion()) continue;
    if (x.sign() > 0 && y.sign() < 0 && x.index() > y.index()) ++up;
    if (x.sign() < 0 && y.sign() > 0 && x.index() > y.index()) ++down;
  }
  if (up != down) return up > down;
  return w.back().sign() > 0 && !w.back().is_torsion();
}

bool sunic_less(const TreeGroupSpec& spec, const Word& u, const Word& v) {
  if (spec.torsion_count != 0) {
    throw UnsupportedSpec("sunic_less: the order is defined only for free L");
  }
  return sunic_positive(inverse(u) * v);
}

std::vector<Word> spanned_tree(std::span<const Word> vertices) {
  std::unordered_set<std::string> seen;
  std::vector<Word> out;
  seen.insert(std::string());
  out.emplace_back();
  for (const Word& v : vertices) {
    for (std::size_t len = v.size(); len > 0; --len) {
      std::string key = v.bytes().substr(0, len);
      if (!seen.insert(key).second) break;
      out.push_back(Word::from_reduced_bytes(std::move(key)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t steiner_walk_length(std::span<const Word> support, const Word& end) {
  std::unordered_set<std::string> seen;
  seen.insert(std::string());
  auto add = [&seen](const Word& v) {
    for (std::size_t len = v.size(); len > 0; --len) {
      if (!seen.insert(v.bytes().substr(0, len)).second) break;
    }
  };
  for (const Word& v : support) add(v);
  add(end);
  const std::size_t edges = seen.size() - 1;
  return 2 * edges - end.size();
}

std::vector<Word> words_of_length(const TreeGroupSpec& spec, unsigned k) {
  const auto letters = alphabet(spec);
  std::vector<Word> layer{Word()};
  for (unsigned step = 0; step < k; ++step) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Letter x : letters) {
        if (!w.empty() && w.back().inverse() == x) continue;
        next.push_back(Word::from_reduced_bytes(
            w.bytes() + static_cast<char>(x.code())));
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace wreath
