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

#include <set>

#include "helpers.hpp"
#include "tightcut/decomp.hpp"
#include "tightcut/matching.hpp"

using namespace testing;

namespace {

void collect_ids(const DecompositionTree& t, std::set<VertexId>& minted, const MultiGraph& root) {
  for (int p = 0; p < t.graph.order(); ++p) {
    if (!root.position(t.graph.id(p))) minted.insert(t.graph.id(p));
  }
  for (const auto& c : t.children) collect_ids(c, minted, root);
}

}  // namespace

TEST_SUITE("decomp") {
  TEST_CASE("strategy names") {
    CHECK(parse_strategy("exhaustive") == Strategy::kExhaustive);
    CHECK(parse_strategy("elp-first") == Strategy::kElpFirst);
    CHECK(strategy_name(Strategy::kElpFirst) == "elp-first");
    CHECK(code_of([] { parse_strategy("greedy"); }) == ErrorCode::kBadParameter);
  }

  TEST_CASE("single leaves") {
    const auto k4 = decompose(gen_named("k4"), Strategy::kExhaustive, 0);
    CHECK(k4.children.empty());
    CHECK(k4.leaf == LeafKind::kBrick);
    const auto k33 = decompose(gen_named("k3,3"), Strategy::kElpFirst, 0);
    CHECK(k33.leaf == LeafKind::kBrace);
    CHECK(brick_number(k33) == 0);
    const auto p = decompose(gen_named("petersen"), Strategy::kExhaustive, 3);
    CHECK(leaf_count(p) == 1);
    CHECK(brick_number(p) == 1);
  }

  TEST_CASE("C6 decomposes into braces") {
    for (Strategy s : {Strategy::kExhaustive, Strategy::kElpFirst}) {
      const auto t = decompose(gen_named("c6"), s, 7);
      CHECK(brick_number(t) == 0);
      CHECK(leaf_count(t) >= 2);
      CHECK_FALSE(validate_tree(t).has_value());
    }
  }

  TEST_CASE("H_n has 2n bricks for every seed and strategy") {
    for (int n = 1; n <= 3; ++n) {
      const MultiGraph g = gen_h_n(n);
      for (Strategy s : {Strategy::kExhaustive, Strategy::kElpFirst}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          const auto t = decompose(g, s, seed);
          CHECK(brick_number(t) == 2 * n);
          CHECK_FALSE(validate_tree(t).has_value());
        }
      }
    }
  }

  TEST_CASE("minted ids are unique across the tree") {
    const MultiGraph g = gen_h_n(3);
    const auto t = decompose(g, Strategy::kExhaustive, 1);
    std::set<VertexId> minted;
    collect_ids(t, minted, g);
    // Each internal node mints two ids.
    CHECK(minted.size() == 2 * static_cast<std::size_t>(leaf_count(t) - 1));
  }

  TEST_CASE("brick and brace predicates") {
    CHECK(is_brick(gen_named("k4")));
    CHECK(is_brick(gen_named("petersen")));
    CHECK(is_brick(gen_named("prism")));
    CHECK(is_brace(gen_named("k3,3")));
    CHECK(is_brace(gen_named("c4")));
    CHECK_FALSE(is_brick(gen_named("c6")));
    CHECK_FALSE(is_brace(gen_named("c6")));
  }

  TEST_CASE("finder returns nothing exactly on bricks and braces") {
    for (const auto& e : mc_corpus(6)) {
      const bool none = brute::tight_cuts(e.graph, true).empty();
      for (Strategy s : {Strategy::kExhaustive, Strategy::kElpFirst}) {
        const auto c = find_nontrivial_tight_cut(e.graph, s, 2);
        CHECK(c.has_value() == !none);
        if (c) CHECK(brute::tight(e.graph, c->shore().bits()));
      }
    }
  }

  TEST_CASE("non matching covered input is rejected") {
    const MultiGraph path = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(code_of([&] { decompose(path, Strategy::kExhaustive, 0); }) == ErrorCode::kNotMatchingCovered);
  }

  TEST_CASE("validation catches a corrupted tree") {
    auto t = decompose(gen_named("c6"), Strategy::kExhaustive, 0);
    REQUIRE_FALSE(t.children.empty());
    auto swapped = t;
    std::swap(swapped.children[0], swapped.children[1]);
    CHECK(validate_tree(swapped).has_value());
    auto relabelled = t;
    relabelled.children[0].leaf = relabelled.children[0].leaf == LeafKind::kBrick ? LeafKind::kBrace : LeafKind::kBrick;
    CHECK(validate_tree(relabelled).has_value());
  }
}
