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

#ifndef WREATH_BALL_HPP_
#define WREATH_BALL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreath/series.hpp"
#include "wreath/wreath_element.hpp"

namespace wreath {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("element budget of " + std::to_string(budget) +
                           " exceeded"),
        budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

// 10^7, or the value of the WREATH_BUDGET environment variable.
std::size_t default_budget();

// All elements of length <= radius, in BFS order.
class Ball {
 public:
  Ball(const WreathGroup& group, std::size_t radius,
       std::size_t budget = default_budget());

  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const WreathElement& element(std::size_t i) const { return elements_[i]; }
  std::size_t length(std::size_t i) const { return lengths_[i]; }
  std::optional<std::size_t> find(const WreathElement& p) const;
  // Number of elements at each length 0..radius.
  const std::vector<std::size_t>& sphere_sizes() const noexcept {
    return spheres_;
  }
  TruncatedSeries sgs_prefix() const;

 private:
  const WreathGroup* group_;
  std::size_t radius_;
  std::vector<WreathElement> elements_;
  std::vector<std::uint8_t> lengths_;
  std::vector<std::size_t> spheres_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace wreath

#endif  // WREATH_BALL_HPP_
