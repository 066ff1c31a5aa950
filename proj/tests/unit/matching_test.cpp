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

#include <random>

#include "helpers.hpp"
#include "tightcut/matching.hpp"

using namespace testing;

namespace {

std::vector<MultiGraph> all_small_graphs() {
  std::vector<MultiGraph> out;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : connected_graphs(n)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("maximum matching size agrees with brute force on all graphs up to 7 vertices") {
    for (const auto& g : all_small_graphs()) {
      const auto mate = maximum_matching(g, g.all());
      int matched = 0;
      for (int v = 0; v < g.order(); ++v) {
        if (mate[v] < 0) continue;
        ++matched;
        CHECK(mate[mate[v]] == v);
        CHECK(g.multiplicity(v, mate[v]) > 0);
      }
      const bool perfect = matched == g.order();
      CHECK(perfect == !brute::perfect_matchings(g).empty());
      CHECK(has_perfect_matching(g) == perfect);
    }
  }

  TEST_CASE("blossom search on odd cycles with pendant paths") {
    // Two triangles joined by a path force a blossom contraction.
    const MultiGraph g = graph_of(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
    CHECK(has_perfect_matching(g));
    const auto m = find_perfect_matching(g, g.all());
    REQUIRE(m);
    CHECK(m->perfect_in(g));
    CHECK_FALSE(has_perfect_matching(gen_named("petersen"), VertexSet::prefix(9)));
  }

  TEST_CASE("Tutte condition agrees with matching search") {
    for (const auto& g : all_small_graphs()) {
      if (g.order() > 7) continue;
      CHECK(tutte_condition_holds(g) == has_perfect_matching(g));
      CHECK(brute::tutte(g) == has_perfect_matching(g));
    }
  }

  TEST_CASE("matching covered and bicritical flags agree with brute force") {
    for (const auto& g : all_small_graphs()) {
      CHECK(is_matching_covered(g) == brute::matching_covered(g));
      if (g.order() >= 4 && is_matching_covered(g)) CHECK(is_bicritical(g) == brute::bicritical(g));
    }
    CHECK(is_matching_covered(gen_named("petersen")));
    CHECK(is_bicritical(gen_named("petersen")));
    CHECK_FALSE(is_bicritical(gen_named("c6")));
    CHECK(code_of([] { is_bicritical(graph_of(2, {{0, 1}})); }) == ErrorCode::kTooSmall);
  }

  TEST_CASE("perfect matching enumeration counts") {
    CHECK(enumerate_perfect_matchings(gen_named("k4"), 100).matchings.size() == 3);
    CHECK(enumerate_perfect_matchings(gen_named("k3,3"), 100).matchings.size() == 6);
    CHECK(enumerate_perfect_matchings(gen_named("c6"), 100).matchings.size() == 2);
    CHECK(enumerate_perfect_matchings(gen_named("petersen"), 100).matchings.size() == 6);
    const auto capped = enumerate_perfect_matchings(gen_named("k3,3"), 4);
    CHECK(capped.truncated);
    CHECK(capped.matchings.size() == 4);
    // Parallel edges are distinct matching members.
    const MultiGraph d = graph_of(2, {{0, 1}, {0, 1}});
    CHECK(enumerate_perfect_matchings(d, 10).matchings.size() == 2);
  }

  TEST_CASE("tightness examples") {
    const MultiGraph c6 = gen_named("c6");
    CHECK(is_tight(c6, by_labels(c6, {"v1", "v2", "v3"})).tight);
    const auto no = is_tight(c6, by_labels(c6, {"v1", "v2", "v4"}));
    CHECK_FALSE(no.tight);
    REQUIRE(no.witness);
    CHECK(no.witness->perfect_in(c6));
    CHECK(brute::crossing(c6, no.witness->edges, by_labels(c6, {"v1", "v2", "v4"}).bits()) != 1);
    CHECK(is_tight(c6, VertexSet{0}).tight);
    CHECK(code_of([&] { is_tight(c6, VertexSet{0, 1}); }) == ErrorCode::kEvenShore);
    CHECK(code_of([&] { is_tight(c6, c6.all()); }) == ErrorCode::kBadShore);
  }

  TEST_CASE("pairwise tightness agrees with enumeration on every odd shore") {
    for (const auto& e : mc_corpus(6)) {
      const MultiGraph& g = e.graph;
      PerfectMatchingOracle oracle(g);
      for (VertexSet x : odd_shores(g, 1)) {
        const bool truth = brute::tight(g, x.bits());
        CHECK(tightness_pairwise(oracle, x).tight == truth);
        CHECK(tightness_by_enumeration(g, x).tight == truth);
      }
    }
  }

  TEST_CASE("pairwise tightness on random 10-vertex matching covered graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
      const MultiGraph g = random_matching_covered(10, 0.35, rng);
      CHECK(brute::matching_covered(g));
      PerfectMatchingOracle oracle(g);
      for (int s = 0; s < 20; ++s) {
        VertexSet x;
        do {
          x = VertexSet(draw_below(rng, 1u << 10));
        } while (!x.odd());
        CHECK(tightness_pairwise(oracle, x).tight == brute::tight(g, x.bits()));
      }
    }
  }

  TEST_CASE("tight cut enumeration matches brute force") {
    for (const auto& e : mc_corpus(8)) {
      if (e.graph.order() < 8) continue;
      const auto lib = enumerate_tight_cuts(e.graph, true);
      std::set<brute::Mask> got;
      for (const Cut& c : lib) got.insert(c.canonical().bits());
      // 8-vertex checks are costly in brute force; every 7th graph suffices.
      if (std::hash<std::string>{}(e.name) % 7 != 0) continue;
      CHECK(got == brute::tight_cuts(e.graph, true));
    }
    CHECK(enumerate_tight_cuts(gen_named("k4"), true).empty());
    CHECK(enumerate_tight_cuts(gen_named("petersen"), true).empty());
    CHECK(enumerate_tight_cuts(gen_named("c6"), true).size() == 3);
  }

  TEST_CASE("oracle memoizes repeated queries") {
    const MultiGraph g = gen_h_n(1);
    PerfectMatchingOracle oracle(g);
    CHECK(oracle.has_perfect_matching(g.all()));
    const auto q = oracle.queries();
    CHECK(oracle.has_perfect_matching(g.all()));
    CHECK(oracle.queries() == q + 1);
  }
}
