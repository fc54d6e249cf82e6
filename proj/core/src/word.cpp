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

#include "wreath/word.hpp"

#include <cctype>
#include <span>
#include <utility>

namespace wreath {

void TreeGroupSpec::validate() const {
  if (free_rank < 0 || torsion_count < 0 || free_rank + torsion_count < 1) {
    throw std::invalid_argument("base group needs M, N >= 0 and M + N >= 1 (got M=" +
                                std::to_string(free_rank) +
                                ", N=" + std::to_string(torsion_count) + ")");
  }
  if (free_rank > 64 || torsion_count > 127) {
    throw std::invalid_argument("base group rank too large for the alphabet");
  }
}

std::string Letter::to_string() const {
  if (is_torsion()) return "b" + std::to_string(index());
  return (sign() > 0 ? "a" : "A") + std::to_string(index());
}

std::vector<Letter> alphabet(const TreeGroupSpec& spec) {
  std::vector<Letter> out;
  for (int i = 1; i <= spec.free_rank; ++i) {
    out.push_back(Letter::a(i, 1));
    out.push_back(Letter::a(i, -1));
  }
  for (int j = 1; j <= spec.torsion_count; ++j) out.push_back(Letter::b(j));
  return out;
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.bytes_.reserve(letters.size());
  for (Letter x : letters) {
    if (!w.bytes_.empty() &&
        static_cast<std::uint8_t>(w.bytes_.back()) == x.inverse().code()) {
      w.bytes_.pop_back();
    } else {
      w.bytes_.push_back(static_cast<char>(x.code()));
    }
  }
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

Word Word::prefix(std::size_t n) const {
  return from_reduced_bytes(bytes_.substr(0, n));
}

Word Word::suffix_from(std::size_t pos) const {
  return from_reduced_bytes(bytes_.substr(pos));
}

Word Word::from_reduced_bytes(std::string bytes) {
  Word w;
  w.bytes_ = std::move(bytes);
  return w;
}

std::string Word::to_string() const {
  if (empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) out += (*this)[i].to_string();
  return out;
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text == "e") return Word();
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char kind = text[pos++];
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos || (kind != 'a' && kind != 'A' && kind != 'b')) {
      throw std::invalid_argument("malformed word: " + std::string(text));
    }
    const int index = std::stoi(std::string(text.substr(start, pos - start)));
    if (index < 1) throw std::invalid_argument("generator index must be >= 1");
    letters.push_back(kind == 'b' ? Letter::b(index)
                                  : Letter::a(index, kind == 'a' ? 1 : -1));
  }
  return reduce(letters);
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  const int c = u.bytes_.compare(v.bytes_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

Word mul(const Word& u, const Word& v) {
  const std::string& a = u.bytes();
  const std::string& b = v.bytes();
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() &&
         Letter::from_code(static_cast<std::uint8_t>(a[a.size() - 1 - cancel]))
                 .inverse()
                 .code() == static_cast<std::uint8_t>(b[cancel])) {
    ++cancel;
  }
  std::string out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.append(a, 0, a.size() - cancel);
  out.append(b, cancel, std::string::npos);
  return Word::from_reduced_bytes(std::move(out));
}

Word inverse(const Word& u) {
  std::string out(u.size(), '\0');
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[u.size() - 1 - i] = static_cast<char>(u[i].inverse().code());
  }
  return Word::from_reduced_bytes(std::move(out));
}

}  // namespace wreath
