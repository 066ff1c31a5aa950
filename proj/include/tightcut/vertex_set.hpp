// Copyright 2026 The tightcut Authors
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

#ifndef TIGHTCUT_VERTEX_SET_HPP_
#define TIGHTCUT_VERTEX_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tightcut {

// A set of vertex positions of one graph, stored as a 64-bit mask. Position i
// is bit i; graphs are capped at 64 vertices so every set fits one word.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> positions) {
    for (int p : positions) bits_ |= std::uint64_t{1} << p;
  }

  static constexpr VertexSet single(int position) {
    return VertexSet(std::uint64_t{1} << position);
  }
  // {0, 1, ..., count-1}
  static constexpr VertexSet prefix(int count) {
    return VertexSet(count >= kCapacity ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool odd() const { return (size() & 1) != 0; }
  constexpr bool contains(int position) const {
    return ((bits_ >> position) & 1U) != 0;
  }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Lowest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr VertexSet& insert(int position) {
    bits_ |= std::uint64_t{1} << position;
    return *this;
  }
  constexpr VertexSet& erase(int position) {
    bits_ &= ~(std::uint64_t{1} << position);
    return *this;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  // Lexicographic order on the sorted member lists, which is the order every
  // search in the library iterates in.
  friend constexpr bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_;
    std::uint64_t y = b.bits_;
    while (x != 0 && y != 0) {
      const int ax = std::countr_zero(x);
      const int by = std::countr_zero(y);
      if (ax != by) return ax < by;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> members() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Size first, then lexicographic.
constexpr bool size_lex_less(VertexSet a, VertexSet b) {
  return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
}

// Calls f on every k-subset of pool in lexicographic order until f returns
// false. Returns false iff stopped early.
template <typename F>
bool for_each_subset_lex(VertexSet pool, int k, F&& f) {
  std::vector<int> items = pool.members();
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(items[i]);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace tightcut

#endif  // TIGHTCUT_VERTEX_SET_HPP_
