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

// Brute-force test oracles. Only MultiGraph accessors are used from the
// library; every algorithm here is a direct enumeration.

#ifndef TIGHTCUT_TESTS_BRUTE_HPP_
#define TIGHTCUT_TESTS_BRUTE_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "tightcut/graph.hpp"

namespace brute {

using tightcut::MultiGraph;
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask full(const MultiGraph& g) {
  return g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
}

// Perfect matchings of G[alive], as edge index lists.
inline std::vector<std::vector<int>> perfect_matchings(const MultiGraph& g, Mask alive) {
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, Mask left) -> void {
    if (left == 0) {
      out.push_back(chosen);
      return;
    }
    const int v = __builtin_ctzll(left);
    for (int e = 0; e < g.size(); ++e) {
      const auto& edge = g.edge(e);
      if (edge.a != v && edge.b != v) continue;
      const int w = edge.a == v ? edge.b : edge.a;
      if (!(left >> w & 1) || w == v) continue;
      chosen.push_back(e);
      self(self, left & ~(Mask{1} << v) & ~(Mask{1} << w));
      chosen.pop_back();
    }
  };
  if (popcount(alive) % 2 == 0) rec(rec, alive);
  return out;
}

inline std::vector<std::vector<int>> perfect_matchings(const MultiGraph& g) {
  return perfect_matchings(g, full(g));
}

inline bool has_perfect_matching(const MultiGraph& g, Mask alive) {
  return !perfect_matchings(g, alive).empty();
}

inline int crossing(const MultiGraph& g, const std::vector<int>& m, Mask x) {
  int c = 0;
  for (int e : m) c += ((x >> g.edge(e).a) & 1) != ((x >> g.edge(e).b) & 1);
  return c;
}

inline bool tight(const MultiGraph& g, Mask x) {
  for (const auto& m : perfect_matchings(g)) {
    if (crossing(g, m, x) != 1) return false;
  }
  return true;
}

inline std::vector<Mask> components(const MultiGraph& g, Mask alive) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (!(alive >> s & 1) || (seen >> s & 1)) continue;
    Mask comp = Mask{1} << s;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < g.size(); ++e) {
        const int a = g.edge(e).a, b = g.edge(e).b;
        if (!(alive >> a & 1) || !(alive >> b & 1)) continue;
        if ((comp >> a & 1) != (comp >> b & 1)) {
          comp |= (Mask{1} << a) | (Mask{1} << b);
          grew = true;
        }
      }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool connected(const MultiGraph& g, Mask alive) {
  return components(g, alive).size() == 1;
}

inline int odd_components(const MultiGraph& g, Mask alive) {
  int odd = 0;
  for (Mask c : components(g, alive)) odd += popcount(c) % 2;
  return odd;
}

inline bool matching_covered(const MultiGraph& g) {
  if (g.order() < 2 || !connected(g, full(g))) return false;
  std::vector<bool> used(g.size(), false);
  for (const auto& m : perfect_matchings(g)) {
    for (int e : m) used[e] = true;
  }
  for (bool u : used) {
    if (!u) return false;
  }
  return true;
}

inline bool bicritical(const MultiGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!has_perfect_matching(g, full(g) & ~(Mask{1} << u) & ~(Mask{1} << v))) return false;
    }
  }
  return g.order() >= 2;
}

// Tutte: G has a perfect matching iff o(G - S) <= |S| for every S.
inline bool tutte(const MultiGraph& g) {
  const Mask all = full(g);
  for (Mask s = 0;; ++s) {
    if (odd_components(g, all & ~s) > popcount(s)) return false;
    if (s == all) break;
  }
  return true;
}

inline std::set<Mask> barriers(const MultiGraph& g, int min_size = 2) {
  std::set<Mask> out;
  const Mask all = full(g);
  for (Mask b = 1; b <= all; ++b) {
    if (popcount(b) >= min_size && odd_components(g, all & ~b) == popcount(b)) out.insert(b);
  }
  return out;
}

inline std::set<Mask> two_separations(const MultiGraph& g) {
  std::set<Mask> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const Mask s = (Mask{1} << u) | (Mask{1} << v);
      const auto comps = components(g, full(g) & ~s);
      bool even = comps.size() >= 2;
      for (Mask c : comps) even = even && popcount(c) % 2 == 0;
      if (even) out.insert(s);
    }
  }
  return out;
}

// Shores not containing vertex 0, one per cut.
inline std::set<Mask> tight_cuts(const MultiGraph& g, bool nontrivial_only) {
  std::set<Mask> out;
  const int n = g.order();
  const auto pms = perfect_matchings(g);
  for (Mask bits = 1; bits < (Mask{1} << (n - 1)); ++bits) {
    const Mask x = bits << 1;
    const int k = popcount(x);
    if (k % 2 == 0) continue;
    if (nontrivial_only && (k < 3 || n - k < 3)) continue;
    bool ok = true;
    for (const auto& m : pms) ok = ok && crossing(g, m, x) == 1;
    if (ok) out.insert(x);
  }
  return out;
}

// Every ∂(V(Q)) for a non-trivial barrier B and odd component Q, as shores
// not containing vertex 0.
inline std::set<Mask> barrier_cut_shores(const MultiGraph& g) {
  std::set<Mask> out;
  const Mask all = full(g);
  for (Mask b : barriers(g)) {
    for (Mask q : components(g, all & ~b)) {
      if (popcount(q) % 2 == 0) continue;
      out.insert((q & 1) ? all & ~q : q);
    }
  }
  return out;
}

inline Mask canonical(const MultiGraph& g, Mask x) { return (x & 1) ? full(g) & ~x : x; }

}  // namespace brute

#endif  // TIGHTCUT_TESTS_BRUTE_HPP_
