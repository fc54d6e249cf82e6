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

#ifndef WREATH_FINITE_GROUP_HPP_
#define WREATH_FINITE_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/series.hpp"

namespace wreath {

// Raised when a multiplication table violates a group axiom or the
// generating-set assumptions. The message names the first broken axiom.
class GroupTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite group (G, Y) given by its Cayley table. Elements are 0..order-1.
class FiniteGroupTable {
 public:
  // Validates associativity, identity, inverses, that Y is symmetric, free of
  // the identity and duplicates, and that Y generates G.
  FiniteGroupTable(std::vector<std::vector<int>> table, int identity,
                   std::vector<int> generators, std::string name = {});

  // {"order": n, "table": [[...]], "identity": i, "generators": [...]}
  static FiniteGroupTable from_json(std::string_view json);
  std::string to_json() const;

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int identity() const noexcept { return identity_; }
  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }

  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  // |a|_Y.
  int length(int a) const { return length_[a]; }
  // Least element index in the conjugacy class of a.
  int class_key(int a) const { return class_key_[a]; }
  // Minimal |.|_Y over the class with the given key.
  int class_length(int key) const { return class_length_[key]; }
  int class_count() const noexcept { return class_count_; }
  bool is_abelian() const;

 private:
  std::vector<std::vector<int>> table_;
  int identity_;
  std::vector<int> generators_;
  std::string name_;
  std::vector<int> inverse_;
  std::vector<int> length_;
  std::vector<int> class_key_;
  std::vector<int> class_length_;
  int class_count_ = 0;
};

// Presets: "trivial", "C2", "C3", "S3" (generators (12), (123), (132)) and
// "D4" (generators r, r^-1, s). Throws GroupTableError for unknown names.
FiniteGroupTable preset_group(std::string_view name);
std::vector<std::string> preset_group_names();

TruncatedSeries sgs_of_finite_group(const FiniteGroupTable& g, Truncation t);
TruncatedSeries cgs_of_finite_group(const FiniteGroupTable& g, Truncation t);
int conjugacy_class_key_G(const FiniteGroupTable& g, int elem);

// The lamp data consumed by the series formulas: standard and conjugacy growth
// series of (G, Y), optionally backed by a finite table.
struct GroupSeriesInput {
  TruncatedSeries sgs;
  TruncatedSeries cgs;
  std::optional<FiniteGroupTable> table;
  std::string name;

  static GroupSeriesInput from_table(const FiniteGroupTable& g, Truncation t);
  // Externally supplied prefixes; both must start with 1 and satisfy
  // [z^m]cgs <= [z^m]sgs.
  static GroupSeriesInput external(TruncatedSeries sgs, TruncatedSeries cgs,
                                   std::string name = "external");
  // The infinite cyclic group with generator {a, a^-1}: 1 + 2z/(1-z).
  static GroupSeriesInput integers(Truncation t);

  Truncation truncation() const noexcept { return sgs.truncation(); }
  // Same lamp with series carried at another degree.
  GroupSeriesInput at(Truncation t) const;
};

}  // namespace wreath

#endif  // WREATH_FINITE_GROUP_HPP_
