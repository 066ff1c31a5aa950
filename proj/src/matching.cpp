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

#include "tightcut/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tightcut/error.hpp"

namespace tightcut {

VertexSet Matching::covered(const MultiGraph& g) const {
  VertexSet out;
  for (int e : edges) out |= g.edge(e).ends();
  return out;
}

bool Matching::valid_in(const MultiGraph& g) const {
  VertexSet seen;
  for (int e : edges) {
    if (e < 0 || e >= g.size()) return false;
    const VertexSet ends = g.edge(e).ends();
    if (seen.intersects(ends)) return false;
    seen |= ends;
  }
  return true;
}

bool Matching::perfect_in(const MultiGraph& g) const {
  return valid_in(g) && covered(g) == g.all();
}

namespace {

// Edmonds' algorithm in the array form: grow an alternating BFS forest from
// one free root at a time, shrinking odd cycles by relabelling their bases.
class Blossom {
 public:
  Blossom(const MultiGraph& g, VertexSet active)
      : g_(g), active_(active), n_(g.order()),
        mate_(n_, -1), parent_(n_), base_(n_), queue_(n_) {}

  std::vector<int> run() {
    // Greedy start; augmentations fix the rest.
    for (int v : active_) {
      if (mate_[v] >= 0) continue;
      for (int w : g_.neighbors(v) & active_) {
        if (mate_[w] < 0) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int root : active_) {
      if (mate_[root] >= 0) continue;
      const int end = find_path(root);
      if (end < 0) continue;
      for (int v = end; v >= 0;) {
        const int pv = parent_[v];
        const int ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child, std::vector<bool>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::vector<bool> used(n_, false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used[root] = true;
    int head = 0;
    int tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      const int v = queue_[head++];
      for (int to : g_.neighbors(v) & active_) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const int cur = lca(v, to);
          std::vector<bool> in_blossom(n_, false);
          mark_path(v, cur, to, in_blossom);
          mark_path(to, cur, v, in_blossom);
          for (int i : active_) {
            if (!in_blossom[base_[i]]) continue;
            base_[i] = cur;
            if (!used[i]) {
              used[i] = true;
              queue_[tail++] = i;
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          used[mate_[to]] = true;
          queue_[tail++] = mate_[to];
        }
      }
    }
    return -1;
  }

  const MultiGraph& g_;
  VertexSet active_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<int> queue_;
};

Matching matching_from_mates(const MultiGraph& g, const std::vector<int>& mate,
                             VertexSet active) {
  Matching m;
  for (int v : active) {
    if (mate[v] > v) m.edges.push_back(*g.edge_index(v, mate[v]));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool perfect_on(const std::vector<int>& mate, VertexSet active) {
  for (int v : active) {
    if (mate[v] < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<int> maximum_matching(const MultiGraph& g, VertexSet active) {
  return Blossom(g, active & g.all()).run();
}

bool has_perfect_matching(const MultiGraph& g, VertexSet active) {
  if (active.odd()) return false;
  return perfect_on(maximum_matching(g, active), active);
}

bool has_perfect_matching(const MultiGraph& g) { return has_perfect_matching(g, g.all()); }

std::optional<Matching> find_perfect_matching(const MultiGraph& g, VertexSet active) {
  if (active.odd()) return std::nullopt;
  const auto mate = maximum_matching(g, active);
  if (!perfect_on(mate, active)) return std::nullopt;
  return matching_from_mates(g, mate, active);
}

bool tutte_condition_holds(const MultiGraph& g) {
  const int n = g.order();
  if (n > kTutteOracleLimit) {
    throw Error(ErrorCode::kTooLarge, "Tutte oracle is limited to " +
                                          std::to_string(kTutteOracleLimit) + " vertices");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const VertexSet s(bits);
    if (odd_component_count(g, g.all() - s) > s.size()) return false;
  }
  return true;
}

MatchingEnumeration enumerate_perfect_matchings(const MultiGraph& g, std::size_t limit) {
  if (limit == 0) throw Error(ErrorCode::kBadParameter, "limit must be at least 1");
  MatchingEnumeration out;
  if (g.order() % 2 != 0) return out;

  std::vector<std::vector<int>> incident(g.order());
  for (int i = 0; i < g.size(); ++i) {
    incident[g.edge(i).a].push_back(i);
    incident[g.edge(i).b].push_back(i);
  }
  std::vector<int> chosen;
  chosen.reserve(g.order() / 2);

  // Returns false once the limit stops the search.
  auto recurse = [&](auto&& self, VertexSet uncovered) -> bool {
    if (uncovered.empty()) {
      if (out.matchings.size() == limit) {
        out.truncated = true;
        return false;
      }
      Matching m{chosen};
      std::sort(m.edges.begin(), m.edges.end());
      out.matchings.push_back(std::move(m));
      return true;
    }
    const int v = uncovered.lowest();
    for (int e : incident[v]) {
      const int w = g.edge(e).other(v);
      if (!uncovered.contains(w)) continue;
      chosen.push_back(e);
      const bool go_on = self(self, uncovered - g.edge(e).ends());
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  recurse(recurse, g.all());
  return out;
}

bool is_matching_covered(const MultiGraph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  PerfectMatchingOracle oracle(g);
  for (const Edge& e : g.edges()) {
    if (!oracle.has_perfect_matching(g.all() - e.ends())) return false;
  }
  return true;
}

bool is_bicritical(const MultiGraph& g) {
  if (g.order() < 4) {
    throw Error(ErrorCode::kTooSmall, "bicriticality needs at least four vertices");
  }
  PerfectMatchingOracle oracle(g);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!oracle.has_perfect_matching(g.all() - VertexSet{u, v})) return false;
    }
  }
  return true;
}

bool PerfectMatchingOracle::has_perfect_matching(VertexSet active) const {
  ++queries_;
  if (active.odd()) return false;
  if (active.empty()) return true;
  const auto it = memo_.find(active.bits());
  if (it != memo_.end()) return it->second;
  const bool result = tightcut::has_perfect_matching(*graph_, active);
  memo_.emplace(active.bits(), result);
  return result;
}

std::optional<Matching> PerfectMatchingOracle::find(VertexSet active) const {
  if (!has_perfect_matching(active)) return std::nullopt;
  return find_perfect_matching(*graph_, active);
}

TightnessVerdict tightness_pairwise(const PerfectMatchingOracle& oracle, VertexSet x) {
  const MultiGraph& g = oracle.graph();
  const std::vector<int> cut = cut_edges(g, x);
  for (std::size_t i = 0; i < cut.size(); ++i) {
    const VertexSet ei = g.edge(cut[i]).ends();
    for (std::size_t j = i + 1; j < cut.size(); ++j) {
      const VertexSet ej = g.edge(cut[j]).ends();
      if (ei.intersects(ej)) continue;
      const VertexSet rest = g.all() - ei - ej;
      if (!oracle.has_perfect_matching(rest)) continue;
      Matching m = *oracle.find(rest);
      m.edges.push_back(cut[i]);
      m.edges.push_back(cut[j]);
      std::sort(m.edges.begin(), m.edges.end());
      return TightnessVerdict{false, std::move(m)};
    }
  }
  return TightnessVerdict{true, std::nullopt};
}

TightnessVerdict tightness_by_enumeration(const MultiGraph& g, VertexSet x) {
  constexpr std::size_t kLimit = 5'000'000;
  const std::vector<int> cut = cut_edges(g, x);
  std::vector<bool> in_cut(g.size(), false);
  for (int e : cut) in_cut[e] = true;
  const MatchingEnumeration all = enumerate_perfect_matchings(g, kLimit);
  if (all.truncated) {
    throw Error(ErrorCode::kSearchBudgetExceeded, "too many perfect matchings to enumerate");
  }
  for (const Matching& m : all.matchings) {
    int crossing = 0;
    for (int e : m.edges) crossing += in_cut[e] ? 1 : 0;
    if (crossing != 1) return TightnessVerdict{false, m};
  }
  return TightnessVerdict{true, std::nullopt};
}

TightnessVerdict is_tight(const MultiGraph& g, VertexSet x) {
  if (x.empty() || x == g.all() || !x.subset_of(g.all())) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
  if (!x.odd()) throw Error(ErrorCode::kEvenShore, "shore " + g.format(x) + " is even");
  if (!is_matching_covered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  PerfectMatchingOracle oracle(g);
  return tightness_pairwise(oracle, x);
}

std::vector<VertexSet> odd_shores(const MultiGraph& g, int min_size) {
  const int n = g.order();
  if (n > kShoreScanLimit) {
    throw Error(ErrorCode::kTooLarge, "shore scans are limited to " +
                                          std::to_string(kShoreScanLimit) + " vertices");
  }
  std::vector<VertexSet> out;
  if (n < 2) return out;
  // Shores avoid position 0, so they range over subsets of positions 1..n-1.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const VertexSet x(bits << 1);
    const int k = x.size();
    if ((k & 1) == 0 || k < min_size || n - k < min_size) continue;
    out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  return out;
}

std::vector<Cut> enumerate_tight_cuts(const MultiGraph& g, bool nontrivial_only) {
  if (!is_matching_covered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  PerfectMatchingOracle oracle(g);
  std::vector<Cut> out;
  for (VertexSet x : odd_shores(g, nontrivial_only ? 3 : 1)) {
    if (tightness_pairwise(oracle, x).tight) out.emplace_back(g, x);
  }
  return out;
}

}  // namespace tightcut
