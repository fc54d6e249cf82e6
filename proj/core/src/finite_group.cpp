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

#include "wreath/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

namespace wreath {

namespace {

std::string idx(int i) { return std::to_string(i); }

using Perm = std::vector<int>;

Perm compose_perm(const Perm& p, const Perm& q) {
  // (p q)(i) = p(q(i)): apply q first.
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

// Table of the group generated by `gens` acting on {0..n-1}, elements listed
// in BFS order from the identity. Returns the table and generator indices.
std::pair<std::vector<std::vector<int>>, std::vector<int>> perm_group_table(
    const std::vector<Perm>& gens) {
  const std::size_t n = gens.front().size();
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const Perm& g : gens) {
      Perm p = compose_perm(elems[k], g);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
      }
    }
  }
  std::vector<std::vector<int>> table(elems.size(),
                                      std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      table[a][b] = index.at(compose_perm(elems[a], elems[b]));
    }
  }
  std::vector<int> gen_idx;
  for (const Perm& g : gens) gen_idx.push_back(index.at(g));
  return {std::move(table), std::move(gen_idx)};
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return t;
}

}  // namespace

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table,
                                   int identity, std::vector<int> generators,
                                   std::string name)
    : table_(std::move(table)),
      identity_(identity),
      generators_(std::move(generators)),
      name_(std::move(name)) {
  const int n = order();
  if (n == 0) throw GroupTableError("group table: order must be positive");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) {
      throw GroupTableError("group table: row " + idx(a) + " has length " +
                            idx(static_cast<int>(table_[a].size())) +
                            ", expected " + idx(n));
    }
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] < 0 || table_[a][b] >= n) {
        throw GroupTableError("group table: entry (" + idx(a) + "," + idx(b) +
                              ") out of range");
      }
    }
  }
  if (identity_ < 0 || identity_ >= n) {
    throw GroupTableError("group table: identity index out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (table_[identity_][a] != a || table_[a][identity_] != a) {
      throw GroupTableError("group table: identity fails at element " + idx(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw GroupTableError("group table: associativity fails at (" +
                                idx(a) + "," + idx(b) + "," + idx(c) + ")");
        }
      }
    }
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) {
      throw GroupTableError("group table: element " + idx(a) +
                            " has no inverse");
    }
  }
  std::set<int> gens;
  for (int g : generators_) {
    if (g < 0 || g >= n) {
      throw GroupTableError("generators: index " + idx(g) + " out of range");
    }
    if (g == identity_) {
      throw GroupTableError("generators: the identity " + idx(g) +
                            " is not allowed");
    }
    if (!gens.insert(g).second) {
      throw GroupTableError("generators: duplicate element " + idx(g));
    }
  }
  for (int g : generators_) {
    if (!gens.contains(inverse_[g])) {
      throw GroupTableError("generators: not symmetric, inverse of " + idx(g) +
                            " missing");
    }
  }
  length_.assign(n, -1);
  length_[identity_] = 0;
  std::deque<int> queue{identity_};
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int g : generators_) {
      const int b = table_[a][g];
      if (length_[b] < 0) {
        length_[b] = length_[a] + 1;
        queue.push_back(b);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (length_[a] < 0) {
      throw GroupTableError("generators: do not generate, element " + idx(a) +
                            " unreachable");
    }
  }
  class_key_.assign(n, -1);
  class_length_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (class_key_[a] >= 0) continue;
    ++class_count_;
    int best_len = length_[a];
    for (int v = 0; v < n; ++v) {
      const int c = table_[table_[v][a]][inverse_[v]];
      if (class_key_[c] < 0) {
        class_key_[c] = a;
        best_len = std::min(best_len, length_[c]);
      }
    }
    class_length_[a] = best_len;
  }
}

bool FiniteGroupTable::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

FiniteGroupTable FiniteGroupTable::from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
    const int n = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n) {
      throw GroupTableError("group table: " + idx(static_cast<int>(table.size())) +
                            " rows for order " + idx(n));
    }
    std::string name = j.value("name", std::string("custom"));
    return FiniteGroupTable(std::move(table), j.at("identity").get<int>(),
                            j.at("generators").get<std::vector<int>>(),
                            std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw GroupTableError(std::string("group file: ") + e.what());
  }
}

std::string FiniteGroupTable::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["order"] = order();
  j["table"] = table_;
  j["identity"] = identity_;
  j["generators"] = generators_;
  return j.dump();
}

std::vector<std::string> preset_group_names() {
  return {"trivial", "C2", "C3", "S3", "D4"};
}

FiniteGroupTable preset_group(std::string_view name) {
  if (name == "trivial") return FiniteGroupTable({{0}}, 0, {}, "trivial");
  if (name == "C2") return FiniteGroupTable(cyclic_table(2), 0, {1}, "C2");
  if (name == "C3") return FiniteGroupTable(cyclic_table(3), 0, {1, 2}, "C3");
  if (name == "S3") {
    auto [table, gens] = perm_group_table({{1, 0, 2}, {1, 2, 0}, {2, 0, 1}});
    return FiniteGroupTable(std::move(table), 0, std::move(gens), "S3");
  }
  if (name == "D4") {
    auto [table, gens] =
        perm_group_table({{1, 2, 3, 0}, {3, 0, 1, 2}, {0, 3, 2, 1}});
    return FiniteGroupTable(std::move(table), 0, std::move(gens), "D4");
  }
  throw GroupTableError("unknown group preset '" + std::string(name) + "'");
}

TruncatedSeries sgs_of_finite_group(const FiniteGroupTable& g, Truncation t) {
  TruncatedSeries out(t);
  for (int a = 0; a < g.order(); ++a) {
    const auto m = static_cast<std::size_t>(g.length(a));
    if (m <= t.degree) out.set(m, out[m] + 1);
  }
  return out;
}

TruncatedSeries cgs_of_finite_group(const FiniteGroupTable& g, Truncation t) {
  TruncatedSeries out(t);
  for (int a = 0; a < g.order(); ++a) {
    if (g.class_key(a) != a) continue;
    const auto m = static_cast<std::size_t>(g.class_length(a));
    if (m <= t.degree) out.set(m, out[m] + 1);
  }
  return out;
}

int conjugacy_class_key_G(const FiniteGroupTable& g, int elem) {
  return g.class_key(elem);
}

GroupSeriesInput GroupSeriesInput::from_table(const FiniteGroupTable& g,
                                              Truncation t) {
  return {sgs_of_finite_group(g, t), cgs_of_finite_group(g, t), g, g.name()};
}

GroupSeriesInput GroupSeriesInput::external(TruncatedSeries sgs,
                                            TruncatedSeries cgs,
                                            std::string name) {
  if (sgs.degree() != cgs.degree()) {
    throw SeriesError(SeriesErrc::kDegreeMismatch,
                      "lamp series: sgs and cgs degrees differ");
  }
  if (sgs[0] != 1 || cgs[0] != 1) {
    throw std::invalid_argument("lamp series: constant terms must be 1");
  }
  for (std::size_t m = 0; m <= sgs.degree(); ++m) {
    if (cgs[m] < 0 || cgs[m] > sgs[m]) {
      throw std::invalid_argument("lamp series: need 0 <= [z^" +
                                  std::to_string(m) + "]cgs <= [z^" +
                                  std::to_string(m) + "]sgs");
    }
  }
  return {std::move(sgs), std::move(cgs), std::nullopt, std::move(name)};
}

GroupSeriesInput GroupSeriesInput::integers(Truncation t) {
  TruncatedSeries s = TruncatedSeries::one(t) +
                      TruncatedSeries::geometric(t).shifted(1) * Rational(2);
  return {s, s, std::nullopt, "Z"};
}

GroupSeriesInput GroupSeriesInput::at(Truncation t) const {
  if (table) return from_table(*table, t);
  if (name == "Z") return integers(t);
  if (t.degree > sgs.degree()) {
    throw SeriesError(SeriesErrc::kDegreeMismatch,
                      "lamp series: supplied prefix shorter than degree " +
                          std::to_string(t.degree));
  }
  return {sgs.retruncated(t), cgs.retruncated(t), std::nullopt, name};
}

}  // namespace wreath
