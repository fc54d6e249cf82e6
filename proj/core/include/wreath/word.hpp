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

#ifndef WREATH_WORD_HPP_
#define WREATH_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

// L = <a_1..a_M, b_1..b_N | b_j^2>, whose Cayley graph on
// X = {a_i^{+-1}, b_j} is the (2M+N)-regular tree.
struct TreeGroupSpec {
  int free_rank = 0;      // M
  int torsion_count = 0;  // N

  int tree_degree() const noexcept { return 2 * free_rank + torsion_count; }
  // Throws std::invalid_argument unless M, N >= 0 and M + N >= 1.
  void validate() const;
  friend bool operator==(const TreeGroupSpec&, const TreeGroupSpec&) = default;
};

// A generator of L. Codes are ordered a1 < A1 < a2 < A2 < ... < b1 < b2 < ...
// which is the fixed alphabet order used for every lexicographic tie-break.
class Letter {
 public:
  static constexpr std::uint8_t kTorsionBase = 128;

  constexpr Letter() = default;
  static constexpr Letter a(int index, int sign = 1) {
    return Letter(static_cast<std::uint8_t>(2 * (index - 1) + (sign < 0 ? 1 : 0)));
  }
  static constexpr Letter b(int index) {
    return Letter(static_cast<std::uint8_t>(kTorsionBase + index - 1));
  }
  static constexpr Letter from_code(std::uint8_t code) { return Letter(code); }

  constexpr std::uint8_t code() const noexcept { return code_; }
  constexpr bool is_torsion() const noexcept { return code_ >= kTorsionBase; }
  // 1-based generator index.
  constexpr int index() const noexcept {
    return is_torsion() ? code_ - kTorsionBase + 1 : code_ / 2 + 1;
  }
  constexpr int sign() const noexcept {
    return is_torsion() ? 1 : ((code_ & 1u) ? -1 : 1);
  }
  constexpr Letter inverse() const noexcept {
    return is_torsion() ? *this : Letter(static_cast<std::uint8_t>(code_ ^ 1u));
  }

  std::string to_string() const;

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 0;
};

// All letters of X for the given spec, in alphabet order.
std::vector<Letter> alphabet(const TreeGroupSpec& spec);

// A freely reduced word, i.e. an element of L and a vertex of its tree
// Cayley graph. The empty word is the identity e'. Words compare by shortlex
// (length first, then letters in alphabet order).
class Word {
 public:
  Word() = default;
  // Freely reduces the given letters.
  explicit Word(std::initializer_list<Letter> letters);
  static Word reduce(std::span<const Letter> letters);

  std::size_t size() const noexcept { return bytes_.size(); }
  bool empty() const noexcept { return bytes_.empty(); }
  Letter operator[](std::size_t i) const {
    return Letter::from_code(static_cast<std::uint8_t>(bytes_[i]));
  }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }
  std::vector<Letter> letters() const;

  // Prefix / suffix / factor views as words (already reduced).
  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t pos) const;

  // Raw byte key, suitable for hashing and compact serialization.
  const std::string& bytes() const noexcept { return bytes_; }
  static Word from_reduced_bytes(std::string bytes);

  // Tokens "a1", "A1" (inverse), "b1", ...; the empty word prints as "e".
  std::string to_string() const;
  static Word parse(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  std::string bytes_;
};

Word mul(const Word& u, const Word& v);
Word inverse(const Word& u);
inline Word operator*(const Word& u, const Word& v) { return mul(u, v); }

}  // namespace wreath

template <>
struct std::hash<wreath::Word> {
  std::size_t operator()(const wreath::Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};

#endif  // WREATH_WORD_HPP_
