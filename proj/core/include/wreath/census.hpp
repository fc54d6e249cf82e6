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

#ifndef WREATH_CENSUS_HPP_
#define WREATH_CENSUS_HPP_

#include <cstddef>
#include <vector>

#include "wreath/ball.hpp"
#include "wreath/series.hpp"
#include "wreath/wreath_element.hpp"

namespace wreath {

// Number of conjugacy classes by minimal length m = 0..radius.
struct Census {
  std::vector<std::size_t> counts;
  TruncatedSeries as_series() const;
};

// Groups the ball by key_of. Exact for every m <= radius.
Census conjugacy_census(const WreathGroup& group, const Ball& ball);

struct UnionFindCensus {
  Census census;
  std::size_t conj_bound = 0;  // slack of the last pass
  bool stable = false;         // last two passes agreed
};

// Merges x with h^-1 x h for all h of length <= B whenever both lie in the
// ball. Never merges non-conjugate elements, so counts can only be too high.
Census unionfind_census(const WreathGroup& group, const Ball& ball,
                        std::size_t conj_bound);

// Merges ball elements joined by a chain of conjugations by single
// generators whose intermediate elements all have length <= radius + slack.
// Every conjugator of length <= slack / 2 is such a chain, so this merges at
// least as much as unionfind_census(slack / 2) without building a larger ball.
// Visited elements are stored as hashes; a collision only prunes the search,
// so merges stay sound.
Census unionfind_census_detour(const WreathGroup& group, const Ball& ball,
                               std::size_t slack);

// Runs unionfind_census_detour with slack B, B+2, ... up to max_bound until
// two consecutive passes agree.
UnionFindCensus unionfind_census_stable(const WreathGroup& group,
                                        const Ball& ball,
                                        std::size_t start_bound,
                                        std::size_t max_bound);

}  // namespace wreath

#endif  // WREATH_CENSUS_HPP_
