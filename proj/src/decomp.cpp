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

#include "tightcut/decomp.hpp"

#include <random>

#include "tightcut/corpus.hpp"
#include "tightcut/elp.hpp"
#include "tightcut/error.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

std::string_view strategy_name(Strategy s) {
  return s == Strategy::kExhaustive ? "exhaustive" : "elp-first";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "exhaustive") return Strategy::kExhaustive;
  if (name == "elp-first" || name == "elp") return Strategy::kElpFirst;
  throw Error(ErrorCode::kBadParameter, "unknown strategy '" + std::string(name) + "'");
}

std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g, Strategy strategy,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (strategy == Strategy::kExhaustive) {
    std::vector<VertexSet> shores = odd_shores(g, 3);
    shuffle_portable(shores, rng);
    PerfectMatchingOracle oracle(g);
    for (VertexSet x : shores) {
      if (!is_connected(g, x) || !is_connected(g, g.all() - x)) continue;
      if (tightness_pairwise(oracle, x).tight) return Cut(g, x);
    }
    return std::nullopt;
  }
  const StructureIndex index = index_structure(g);
  std::vector<Cut> pool;
  for (const auto& e : barrier_cuts(g, index)) pool.push_back(e.cut);
  for (const auto& s : index.separations) {
    for (const auto& e : two_separation_cuts(g, s)) {
      if (!e.cut.trivial()) pool.push_back(e.cut);
    }
  }
  if (pool.empty()) return std::nullopt;
  return pool[draw_below(rng, pool.size())];
}

namespace {

DecompositionTree split(const MultiGraph& g, Strategy strategy, std::mt19937_64& rng,
                        VertexId& next_id) {
  DecompositionTree node;
  node.graph = g.with_next_id(next_id);
  next_id = node.graph.next_id();
  const auto cut = find_nontrivial_tight_cut(node.graph, strategy, rng());
  if (!cut) {
    node.leaf = is_bipartite(node.graph) ? LeafKind::kBrace : LeafKind::kBrick;
    return node;
  }
  node.cut = *cut;
  auto [shrink_x, shrink_xbar] = cut_contractions(node.graph, cut->shore());
  next_id = shrink_x.next_id();
  node.children.push_back(split(shrink_x, strategy, rng, next_id));
  node.children.push_back(split(shrink_xbar, strategy, rng, next_id));
  return node;
}

}  // namespace

DecompositionTree decompose(const MultiGraph& g, Strategy strategy, std::uint64_t seed) {
  if (!is_matching_covered(g)) {
    throw Error(ErrorCode::kNotMatchingCovered, "decomposition needs a matching covered graph");
  }
  std::mt19937_64 rng(seed);
  VertexId next_id = g.next_id();
  return split(g, strategy, rng, next_id);
}

int brick_number(const DecompositionTree& tree) {
  if (tree.children.empty()) return tree.leaf == LeafKind::kBrick ? 1 : 0;
  int total = 0;
  for (const auto& c : tree.children) total += brick_number(c);
  return total;
}

int leaf_count(const DecompositionTree& tree) {
  if (tree.children.empty()) return 1;
  int total = 0;
  for (const auto& c : tree.children) total += leaf_count(c);
  return total;
}

bool is_brick(const MultiGraph& g) {
  return !is_bipartite(g) && enumerate_tight_cuts(g, true).empty();
}

bool is_brace(const MultiGraph& g) {
  return is_bipartite(g) && enumerate_tight_cuts(g, true).empty();
}

std::optional<std::string> validate_tree(const DecompositionTree& tree) {
  const MultiGraph& g = tree.graph;
  if (tree.children.empty()) {
    if (tree.cut || !tree.leaf) return "leaf " + g.format(g.all()) + " carries a cut or no kind";
    if (!is_matching_covered(g)) return "leaf " + g.format(g.all()) + " is not matching covered";
    if (!enumerate_tight_cuts(g, true).empty()) {
      return "leaf " + g.format(g.all()) + " has a non-trivial tight cut";
    }
    const bool brace = is_bipartite(g);
    if (brace != (*tree.leaf == LeafKind::kBrace)) {
      return "leaf " + g.format(g.all()) + " has the wrong kind";
    }
    return std::nullopt;
  }
  if (!tree.cut || tree.leaf || tree.children.size() != 2) {
    return "internal node without a cut or with a leaf kind";
  }
  const Cut& c = *tree.cut;
  if (c.graph() != g.fingerprint() || c.trivial()) return "internal cut is foreign or trivial";
  if (!is_tight(g, c.shore()).tight) return "internal cut " + g.format(c.shore()) + " not tight";
  const auto& a = tree.children[0].graph;
  const auto& b = tree.children[1].graph;
  // Children must be the two contractions: same vertex ids outside the
  // contracted shore and the same edges once ids line up.
  const MultiGraph ea = contract(g, c.shore(), a.label(a.order() - 1), a.id(a.order() - 1));
  const MultiGraph eb = contract(g, c.other_shore(), b.label(b.order() - 1), b.id(b.order() - 1));
  if (ea.fingerprint() != a.fingerprint() || eb.fingerprint() != b.fingerprint()) {
    return "children of " + g.format(c.shore()) + " are not its contractions";
  }
  for (const auto& child : tree.children) {
    if (auto why = validate_tree(child)) return why;
  }
  return std::nullopt;
}

}  // namespace tightcut
