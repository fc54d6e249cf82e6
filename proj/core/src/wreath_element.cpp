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

#include "wreath/wreath_element.hpp"

#include <algorithm>
#include <map>

#include "wreath/tree_group.hpp"

namespace wreath {

namespace {

bool vertex_less(const std::pair<Word, int>& a, const std::pair<Word, int>& b) {
  return a.first < b.first;
}

void append_word(std::string& out, const Word& w) {
  out.push_back(static_cast<char>(w.size() & 0xff));
  out.push_back(static_cast<char>((w.size() >> 8) & 0xff));
  out += w.bytes();
}

void append_int(std::string& out, int v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

}  // namespace

int WreathElement::lamp_at(const Word& v, int identity) const {
  auto it = std::lower_bound(support.begin(), support.end(),
                             std::pair<Word, int>(v, 0), vertex_less);
  if (it != support.end() && it->first == v) return it->second;
  return identity;
}

WreathGroup::WreathGroup(FiniteGroupTable lamp, TreeGroupSpec base)
    : lamp_(std::make_shared<const FiniteGroupTable>(std::move(lamp))),
      base_(base) {
  base_.validate();
  for (Letter x : alphabet(base_)) {
    generators_.push_back({{}, Word({x})});
  }
  for (int y : lamp_->generators()) {
    generators_.push_back({{{Word(), y}}, Word()});
  }
}

WreathElement WreathGroup::make(std::vector<std::pair<Word, int>> lamps,
                                Word cursor) const {
  std::map<Word, int> acc;
  for (auto& [v, g] : lamps) {
    auto [it, fresh] = acc.emplace(v, g);
    if (!fresh) it->second = lamp_->mul(it->second, g);
  }
  WreathElement out;
  out.cursor = std::move(cursor);
  for (auto& [v, g] : acc) {
    if (g != lamp_->identity()) out.support.emplace_back(v, g);
  }
  return out;
}

WreathElement WreathGroup::multiply(const WreathElement& p,
                                    const WreathElement& q) const {
  std::map<Word, int> acc(p.support.begin(), p.support.end());
  for (const auto& [v, g] : q.support) {
    const Word u = p.cursor * v;
    auto [it, fresh] = acc.emplace(u, g);
    if (!fresh) it->second = lamp_->mul(it->second, g);
  }
  WreathElement out;
  out.cursor = p.cursor * q.cursor;
  for (auto& [v, g] : acc) {
    if (g != lamp_->identity()) out.support.emplace_back(v, g);
  }
  return out;
}

WreathElement WreathGroup::invert(const WreathElement& p) const {
  const Word minv = inverse(p.cursor);
  WreathElement out;
  out.cursor = minv;
  for (const auto& [v, g] : p.support) {
    out.support.emplace_back(minv * v, lamp_->inverse(g));
  }
  std::sort(out.support.begin(), out.support.end(), vertex_less);
  return out;
}

WreathElement WreathGroup::conj(const WreathElement& p, const Word& d) const {
  const Word dinv = inverse(d);
  WreathElement out;
  out.cursor = dinv * p.cursor * d;
  for (const auto& [v, g] : p.support) out.support.emplace_back(dinv * v, g);
  std::sort(out.support.begin(), out.support.end(), vertex_less);
  return out;
}

WreathElement WreathGroup::conj(const WreathElement& p,
                                const WreathElement& q) const {
  return multiply(multiply(invert(q), p), q);
}

WreathElement WreathGroup::step(const WreathElement& p,
                                std::size_t generator) const {
  const WreathElement& gen = generators_[generator];
  WreathElement out = p;
  if (gen.support.empty()) {
    out.cursor = p.cursor * gen.cursor;
    return out;
  }
  const int y = gen.support.front().second;
  auto it = std::lower_bound(out.support.begin(), out.support.end(),
                             std::pair<Word, int>(p.cursor, 0), vertex_less);
  if (it != out.support.end() && it->first == p.cursor) {
    it->second = lamp_->mul(it->second, y);
    if (it->second == lamp_->identity()) out.support.erase(it);
  } else {
    out.support.insert(it, {p.cursor, y});
  }
  return out;
}

std::size_t WreathGroup::element_length(const WreathElement& p) const {
  std::vector<Word> verts;
  std::size_t lamps = 0;
  for (const auto& [v, g] : p.support) {
    verts.push_back(v);
    lamps += static_cast<std::size_t>(lamp_->length(g));
  }
  return steiner_walk_length(verts, p.cursor) + lamps;
}

std::string WreathGroup::serialize(const WreathElement& p) const {
  std::string out;
  append_word(out, p.cursor);
  for (const auto& [v, g] : p.support) {
    append_word(out, v);
    append_int(out, g);
  }
  return out;
}

std::string WreathGroup::to_string(const WreathElement& p) const {
  std::string out = "[";
  for (std::size_t i = 0; i < p.support.size(); ++i) {
    if (i) out += ", ";
    out += p.support[i].first.to_string() + ":" +
           std::to_string(p.support[i].second);
  }
  return out + "] @ " + p.cursor.to_string();
}

}  // namespace wreath
