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

#ifndef TIGHTCUT_MATCHING_HPP_
#define TIGHTCUT_MATCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

// A set of pairwise disjoint edges, held as sorted edge indices. Parallel
// edges are distinct members.
struct Matching {
  std::vector<int> edges;

  VertexSet covered(const MultiGraph& g) const;
  bool valid_in(const MultiGraph& g) const;
  bool perfect_in(const MultiGraph& g) const;
  bool operator==(const Matching&) const = default;
};

// Maximum matching of G[active] by Edmonds' blossom-shrinking augmenting path
// search. Returns mate[v] (a position, or -1) for every position of G.
std::vector<int> maximum_matching(const MultiGraph& g, VertexSet active);

bool has_perfect_matching(const MultiGraph& g);
bool has_perfect_matching(const MultiGraph& g, VertexSet active);
// A perfect matching of G[active] using the lowest-index edge of each pair.
std::optional<Matching> find_perfect_matching(const MultiGraph& g, VertexSet active);

// Tutte's condition o(G-S) <= |S| for every S ⊆ V(G), by exhaustive subset
// scan. Throws kTooLarge above kTutteOracleLimit vertices.
inline constexpr int kTutteOracleLimit = 14;
bool tutte_condition_holds(const MultiGraph& g);

struct MatchingEnumeration {
  std::vector<Matching> matchings;
  bool truncated = false;
};

// All perfect matchings in deterministic order (branch on the lowest
// uncovered vertex, edges in index order), stopping after `limit`.
MatchingEnumeration enumerate_perfect_matchings(const MultiGraph& g, std::size_t limit);

bool is_matching_covered(const MultiGraph& g);
// Throws kTooSmall below four vertices.
bool is_bicritical(const MultiGraph& g);

// Memoized perfect-matching existence for induced subgraphs of one graph.
// Not thread-safe; each worker keeps its own. The graph must outlive it.
class PerfectMatchingOracle {
 public:
  explicit PerfectMatchingOracle(const MultiGraph& g) : graph_(&g) {}

  const MultiGraph& graph() const { return *graph_; }
  bool has_perfect_matching(VertexSet active) const;
  std::optional<Matching> find(VertexSet active) const;
  std::size_t queries() const { return queries_; }

 private:
  const MultiGraph* graph_;
  mutable std::unordered_map<std::uint64_t, bool> memo_;
  mutable std::size_t queries_ = 0;
};

struct TightnessVerdict {
  bool tight = true;
  // Present iff !tight: a perfect matching with |M ∩ ∂(X)| != 1.
  std::optional<Matching> witness;
};

// Checked tightness of ∂(X). Throws kBadShore, kEvenShore, kNotMatchingCovered.
TightnessVerdict is_tight(const MultiGraph& g, VertexSet x);

// Pairwise test: ∂(X) is tight iff no two disjoint cut edges e, f leave
// G - V(e) - V(f) with a perfect matching. Preconditions are not rechecked.
TightnessVerdict tightness_pairwise(const PerfectMatchingOracle& oracle, VertexSet x);
// Reference test through full enumeration of perfect matchings.
TightnessVerdict tightness_by_enumeration(const MultiGraph& g, VertexSet x);

// Every tight cut (up to complement) with an odd shore; non-trivial ones only
// if requested. Shores are reported not containing position 0, ordered by
// size then lexicographically. Throws kTooLarge above kShoreScanLimit.
inline constexpr int kShoreScanLimit = 26;
std::vector<Cut> enumerate_tight_cuts(const MultiGraph& g, bool nontrivial_only);

// All odd shores X (up to complement, X not containing position 0) with
// min_size <= |X| <= |V| - min_size, ordered by size then lexicographically.
std::vector<VertexSet> odd_shores(const MultiGraph& g, int min_size);

}  // namespace tightcut

#endif  // TIGHTCUT_MATCHING_HPP_
