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

#include "wreath/ball.hpp"

#include <cstdlib>

namespace wreath {

std::size_t default_budget() {
  if (const char* env = std::getenv("WREATH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

Ball::Ball(const WreathGroup& group, std::size_t radius, std::size_t budget)
    : group_(&group), radius_(radius) {
  if (radius > 255) throw std::invalid_argument("ball: radius must be <= 255");
  elements_.push_back(group.identity());
  lengths_.push_back(0);
  index_.emplace(group.serialize(elements_.front()), 0);
  spheres_.push_back(1);
  std::size_t layer_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    const std::size_t layer_end = elements_.size();
    std::size_t count = 0;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t g = 0; g < group.generators().size(); ++g) {
        WreathElement q = group.step(elements_[i], g);
        std::string key = group.serialize(q);
        if (index_.contains(key)) continue;
        if (elements_.size() >= budget) throw BudgetExceeded(budget);
        index_.emplace(std::move(key), static_cast<std::uint32_t>(elements_.size()));
        elements_.push_back(std::move(q));
        lengths_.push_back(static_cast<std::uint8_t>(r));
        ++count;
      }
    }
    spheres_.push_back(count);
    layer_begin = layer_end;
  }
}

std::optional<std::size_t> Ball::find(const WreathElement& p) const {
  auto it = index_.find(group_->serialize(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TruncatedSeries Ball::sgs_prefix() const {
  TruncatedSeries out(Truncation{radius_});
  for (std::size_t m = 0; m <= radius_; ++m) {
    out.set(m, Rational(static_cast<unsigned long>(spheres_[m])));
  }
  return out;
}

}  // namespace wreath
