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

#include "wreath/census.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <boost/pending/disjoint_sets.hpp>

#include "wreath/conjugacy_key.hpp"

namespace wreath {

TruncatedSeries Census::as_series() const {
  TruncatedSeries out(Truncation{counts.size() - 1});
  for (std::size_t m = 0; m < counts.size(); ++m) {
    out.set(m, Rational(static_cast<unsigned long>(counts[m])));
  }
  return out;
}

Census conjugacy_census(const WreathGroup& group, const Ball& ball) {
  std::unordered_map<std::string, std::size_t> min_length;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    auto [it, fresh] =
        min_length.emplace(key_of(group, ball.element(i)).text, ball.length(i));
    if (!fresh) it->second = std::min(it->second, ball.length(i));
  }
  Census out;
  out.counts.assign(ball.radius() + 1, 0);
  for (const auto& [key, m] : min_length) ++out.counts[m];
  return out;
}

Census unionfind_census(const WreathGroup& group, const Ball& ball,
                        std::size_t conj_bound) {
  const std::size_t n = ball.size();
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(),
                                                        parent.data());
  for (std::size_t i = 0; i < n; ++i) sets.make_set(i);
  if (conj_bound > 0) {
    const Ball conjugators(group, conj_bound);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t h = 1; h < conjugators.size(); ++h) {
        const auto j =
            ball.find(group.conj(ball.element(i), conjugators.element(h)));
        if (j) sets.union_set(i, *j);
      }
    }
  }
  std::vector<std::size_t> best(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find_set(i);
    best[root] = std::min(best[root], ball.length(i));
  }
  Census out;
  out.counts.assign(ball.radius() + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] != std::numeric_limits<std::size_t>::max()) ++out.counts[best[i]];
  }
  return out;
}

Census unionfind_census_detour(const WreathGroup& group, const Ball& ball,
                               std::size_t slack) {
  const std::size_t n = ball.size();
  const std::size_t limit = ball.radius() + slack;
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(),
                                                        parent.data());
  for (std::size_t i = 0; i < n; ++i) sets.make_set(i);
  const std::hash<std::string> hash;
  std::unordered_set<std::size_t> seen;
  std::vector<bool> reached(n, false);
  std::deque<WreathElement> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (reached[i]) continue;
    reached[i] = true;
    seen.insert(hash(group.serialize(ball.element(i))));
    queue.push_back(ball.element(i));
    while (!queue.empty()) {
      const WreathElement x = std::move(queue.front());
      queue.pop_front();
      if (const auto j = ball.find(x)) {
        reached[*j] = true;
        sets.union_set(i, *j);
      }
      for (const WreathElement& s : group.generators()) {
        WreathElement y = group.conj(x, s);
        if (group.element_length(y) > limit) continue;
        if (seen.insert(hash(group.serialize(y))).second) queue.push_back(std::move(y));
      }
    }
  }
  std::vector<std::size_t> best(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find_set(i);
    best[root] = std::min(best[root], ball.length(i));
  }
  Census out;
  out.counts.assign(ball.radius() + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] != std::numeric_limits<std::size_t>::max()) ++out.counts[best[i]];
  }
  return out;
}

UnionFindCensus unionfind_census_stable(const WreathGroup& group,
                                        const Ball& ball,
                                        std::size_t start_bound,
                                        std::size_t max_bound) {
  UnionFindCensus out;
  out.conj_bound = start_bound;
  out.census = unionfind_census_detour(group, ball, start_bound);
  for (std::size_t b = start_bound + 2; b <= max_bound; b += 2) {
    Census next = unionfind_census_detour(group, ball, b);
    out.conj_bound = b;
    if (next.counts == out.census.counts) {
      out.stable = true;
      return out;
    }
    out.census = std::move(next);
  }
  return out;
}

}  // namespace wreath
