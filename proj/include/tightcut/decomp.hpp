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

#ifndef TIGHTCUT_DECOMP_HPP_
#define TIGHTCUT_DECOMP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

enum class Strategy { kExhaustive, kElpFirst };
std::string_view strategy_name(Strategy s);
// Throws kBadParameter.
Strategy parse_strategy(std::string_view name);

enum class LeafKind { kBrick, kBrace };

struct DecompositionTree {
  MultiGraph graph;
  std::optional<Cut> cut;
  // Empty for a leaf, else {G/(X -> x), G/(X̄ -> x̄)} for the cut's shore X.
  std::vector<DecompositionTree> children;
  std::optional<LeafKind> leaf;
};

// exhaustive: odd shores 3 <= |X| <= |V|-3 in seed-shuffled order, first
// tight one. elp-first: a seed-chosen non-trivial barrier-cut or 2-separation
// cut. Either returns nothing iff G is a brick or a brace.
std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g, Strategy strategy,
                                             std::uint64_t seed);

// Throws kNotMatchingCovered. Vertex ids minted by contraction are unique
// across the whole tree.
DecompositionTree decompose(const MultiGraph& g, Strategy strategy, std::uint64_t seed);

int brick_number(const DecompositionTree& tree);
int leaf_count(const DecompositionTree& tree);

// Exhaustive shore scans; G must be matching covered.
bool is_brick(const MultiGraph& g);
bool is_brace(const MultiGraph& g);

// Checks every internal cut is non-trivial and tight, children are the two
// contractions, and every leaf is a matching covered brick or brace of the
// recorded kind. Returns an explanation of the first failure, if any.
std::optional<std::string> validate_tree(const DecompositionTree& tree);

}  // namespace tightcut

#endif  // TIGHTCUT_DECOMP_HPP_
