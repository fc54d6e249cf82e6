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

#ifndef WREATH_TOOLS_CLI_HPP_
#define WREATH_TOOLS_CLI_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wreath/finite_group.hpp"
#include "wreath/series.hpp"
#include "wreath/wreath_series.hpp"

namespace wreath::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kBudget = 3,
};

enum class Format { kJson, kCsv };

// What to compute on: lamp (preset name, "Z", or path to a group or series
// JSON file), base (M, N), truncation degree and an optional oracle radius.
struct SpecFile {
  std::string lamp = "C2";
  TreeGroupSpec base{1, 0};
  std::size_t degree = 12;
  std::optional<std::size_t> oracle_radius;

  // {"lamp": "C2", "base": [1, 0], "degree": 12, "oracle_radius": 8}
  static SpecFile from_json(const std::string& text);
};

// Lamp series at the given degree. Throws std::invalid_argument (or
// GroupTableError) for unknown names or malformed files.
GroupSeriesInput resolve_lamp(const std::string& lamp, Truncation t);
// Finite table for the oracle; nullopt for series-only lamps.
std::optional<FiniteGroupTable> resolve_lamp_table(const std::string& lamp);

struct CompareResult {
  bool agree = true;
  std::optional<std::size_t> first_mismatch;
};

// Coefficientwise comparison of a formula prefix with census counts for
// m = 0..counts.size()-1.
CompareResult compare_prefix(const TruncatedSeries& formula,
                             const std::vector<std::size_t>& counts);

using FormulaFn = std::function<TruncatedSeries(const WreathSpec&)>;

// Runs the formula and the key census up to spec.oracle_radius and prints
// both columns. Returns kOk on agreement, kMismatch naming the first
// differing degree otherwise.
int cmd_compare(const SpecFile& spec, Format format, std::ostream& out,
                std::ostream& err, const FormulaFn& formula = cgs_total);

// Parses argv and dispatches to a subcommand; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wreath::cli

#endif  // WREATH_TOOLS_CLI_HPP_
