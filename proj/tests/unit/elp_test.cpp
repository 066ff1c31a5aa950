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

#include "helpers.hpp"
#include "tightcut/elp.hpp"
#include "tightcut/matching.hpp"

using namespace testing;

namespace {

std::set<brute::Mask> shores_of(const std::vector<ElpCut>& cuts) {
  std::set<brute::Mask> out;
  for (const auto& e : cuts) out.insert(e.cut.canonical().bits());
  return out;
}

}  // namespace

TEST_SUITE("elp") {
  TEST_CASE("barrier predicate") {
    const MultiGraph c6 = gen_named("c6");
    CHECK(is_barrier(c6, by_labels(c6, {"v4", "v6"})));
    CHECK(is_barrier(c6, VertexSet{0}));
    CHECK_FALSE(is_barrier(c6, by_labels(c6, {"v1", "v2"})));
    CHECK(code_of([&] { is_barrier(c6, VertexSet{}); }) == ErrorCode::kEmptySet);
    CHECK(code_of([&] { is_barrier(c6, VertexSet{9}); }) == ErrorCode::kBadVertex);
    const auto b = make_barrier(c6, by_labels(c6, {"v2", "v4", "v6"}));
    REQUIRE(b);
    CHECK(b->odd_components().size() == 3);
    CHECK_FALSE(b->trivial());
  }

  TEST_CASE("H'_n has the barrier {u1,u2}") {
    for (int n : {4, 6}) {
      const MultiGraph g = gen_h_n_prime(n);
      CHECK(is_barrier(g, by_labels(g, {"u1", "u2"})));
    }
  }

  TEST_CASE("barrier enumeration equals the all-subsets oracle") {
    for (const auto& e : mc_corpus(8)) {
      const auto lib = enumerate_nontrivial_barriers(e.graph);
      std::set<brute::Mask> got;
      for (const auto& b : lib) got.insert(b.vertices.bits());
      REQUIRE(got == brute::barriers(e.graph));
      CHECK(std::is_sorted(lib.begin(), lib.end(), [](const Barrier& a, const Barrier& b) {
        return size_lex_less(a.vertices, b.vertices);
      }));
      for (const auto& b : lib) {
        bool contained = false;
        for (const auto& o : lib) contained = contained || (b.vertices.subset_of(o.vertices) && o.vertices != b.vertices);
        CHECK(b.maximal == !contained);
      }
    }
  }

  TEST_CASE("barrier search is capped") {
    std::vector<std::pair<int, int>> path;
    for (int i = 0; i + 1 < 22; ++i) path.emplace_back(i, i + 1);
    const MultiGraph g = build_graph(22, path);
    CHECK(code_of([&] { enumerate_nontrivial_barriers(g); }) == ErrorCode::kTooLarge);
  }

  TEST_CASE("2-separations equal the all-pairs oracle") {
    for (const auto& e : mc_corpus(8)) {
      std::set<brute::Mask> got;
      for (const auto& s : two_separations(e.graph)) got.insert(s.pair.bits());
      CHECK(got == brute::two_separations(e.graph));
    }
    CHECK(two_separations(gen_named("petersen")).empty());
    CHECK(two_separations(gen_named("k4")).empty());
    const MultiGraph c6 = gen_named("c6");
    CHECK(is_two_separation(c6, by_labels(c6, {"v1", "v4"})));
    CHECK_FALSE(is_two_separation(c6, by_labels(c6, {"v1", "v3"})));
  }

  TEST_CASE("barrier-cuts equal the oracle's odd components") {
    for (const auto& e : mc_corpus(8)) {
      const auto cuts = barrier_cuts(e.graph);
      std::set<brute::Mask> got = shores_of(cuts);
      CHECK(got.size() == cuts.size());
      std::set<brute::Mask> want;
      for (brute::Mask s : brute::barrier_cut_shores(e.graph)) {
        const int k = brute::popcount(s);
        if (k >= 3 && e.graph.order() - k >= 3) want.insert(s);
      }
      CHECK(got == want);
    }
  }

  TEST_CASE("C6 barrier-cuts") {
    const MultiGraph c6 = gen_named("c6");
    const auto cuts = barrier_cuts(c6);
    CHECK(cuts.size() == 3);
    for (const auto& e : cuts) {
      CHECK(e.kind == ElpKind::kBarrierCut);
      CHECK(validate_elp_cut(c6, e));
      CHECK(is_tight(c6, e.shore()).tight);
    }
  }

  TEST_CASE("is_barrier_cut finds a witness for every barrier-cut") {
    for (const auto& e : mc_corpus(6)) {
      const MultiGraph& g = e.graph;
      const auto want = brute::barrier_cut_shores(g);
      for (VertexSet x : odd_shores(g, 3)) {
        const auto w = is_barrier_cut(g, x);
        CHECK(w.has_value() == (want.count(x.bits()) > 0));
        if (!w) continue;
        CHECK(is_barrier(g, w->barrier.vertices));
        CHECK((w->component == x || w->component == g.all() - x));
        CHECK(g.neighborhood(w->component).subset_of(w->barrier.vertices));
      }
    }
    const MultiGraph c6 = gen_named("c6");
    const auto w = is_barrier_cut(c6, by_labels(c6, {"v1", "v2", "v3"}));
    REQUIRE(w);
    CHECK(w->barrier.vertices == by_labels(c6, {"v4", "v6"}));
    CHECK(code_of([&] { is_barrier_cut(c6, VertexSet{}); }) == ErrorCode::kBadShore);
  }

  TEST_CASE("2-separation cuts enumerate every grouping and both apexes") {
    const MultiGraph g = gen_h_n(1);
    const auto seps = two_separations(g);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0].pair == by_labels(g, {"v1", "u3"}));
    const auto cuts = two_separation_cuts(g, seps[0]);
    CHECK(!cuts.empty());
    for (const auto& e : cuts) {
      CHECK(e.kind == ElpKind::kTwoSeparationCut);
      CHECK(seps[0].pair.contains(e.apex));
      CHECK(validate_elp_cut(g, e));
      CHECK(is_tight(g, e.shore()).tight);
    }
  }

  TEST_CASE("ELP set on H_n is the two end cuts") {
    for (int n = 2; n <= 4; ++n) {
      const MultiGraph g = gen_h_n(n);
      std::vector<std::string> vs;
      for (int i = 1; i <= 2 * n + 1; ++i) vs.push_back("v" + std::to_string(i));
      const Cut c(g, g.set_of_labels(vs));
      const auto elp = elp_set(g, c);
      const std::string a = "v" + std::to_string(2 * n - 1), b = "v" + std::to_string(2 * n),
                        d = "v" + std::to_string(2 * n + 1);
      const std::vector<std::string> tail = {a, b, d};
      const std::set<brute::Mask> want = {Cut(g, by_labels(g, {"u1", "u2", "u3"})).canonical().bits(),
                                          Cut(g, g.set_of_labels(tail)).canonical().bits()};
      CHECK(shores_of(elp) == want);
      CHECK(elp.size() == 2);
      for (const auto& e : elp) CHECK(is_laminar(e.cut, c));
    }
  }

  TEST_CASE("ELP set on H'_n has one member") {
    for (int n : {4, 6}) {
      const MultiGraph g = gen_h_n_prime(n);
      const Cut c(g, by_labels(g, {"v1", "v2", "v3"}));
      const auto elp = elp_set(g, c);
      REQUIRE(elp.size() == 1);
      std::vector<std::string> vs;
      for (int i = 1; i <= 2 * n + 1; ++i) vs.push_back("v" + std::to_string(i));
      CHECK(elp[0].cut == Cut(g, g.set_of_labels(vs)));
    }
  }

  TEST_CASE("ELP set errors") {
    const MultiGraph c6 = gen_named("c6");
    CHECK(code_of([&] { elp_set(c6, Cut(c6, VertexSet{0})); }) == ErrorCode::kTrivialCut);
    const MultiGraph k4 = gen_named("k4");
    CHECK(code_of([&] { elp_set(c6, Cut(k4, VertexSet{0, 1, 2})); }) == ErrorCode::kGraphMismatch);
  }

  TEST_CASE("ELP members are sheltered or laminar, tight and non-trivial") {
    for (const auto& e : mc_corpus(8)) {
      const MultiGraph& g = e.graph;
      for (const Cut& c : enumerate_tight_cuts(g, true)) {
        for (const auto& m : elp_set(g, c)) {
          CHECK_FALSE(m.cut.trivial());
          CHECK(validate_elp_cut(g, m));
          if (m.kind == ElpKind::kBarrierCut) {
            CHECK((m.certificate.subset_of(c.shore()) || m.certificate.subset_of(c.other_shore())));
          } else {
            CHECK(is_laminar(m.cut, c));
          }
        }
      }
    }
  }

  TEST_CASE("lifting a 2-separation through a contraction") {
    // In H_2, ∂(X) for X = {v1,v2,v3,u1,u2} is a 2-separation cut of {v3,u3}.
    const MultiGraph g = gen_h_n(2);
    const VertexSet x = by_labels(g, {"v1", "v2", "v3", "u1", "u2"});
    const MultiGraph h = contract(g, g.all() - x, "xbar");
    const VertexId xbar = h.id(h.order() - 1);
    const VertexId u2 = g.id(*g.position_of_label("u3"));
    // {x̄, v1} separates H like {u3, v1} separates G.
    const VertexSet s_h = VertexSet{h.order() - 1, *h.position_of_label("v1")};
    REQUIRE(is_two_separation(h, s_h));
    const LiftedSet lifted = lift_from_contraction(g, h, xbar, u2, s_h);
    CHECK(lifted.kind == SeparatorKind::kTwoSeparation);
    CHECK(lifted.vertices == by_labels(g, {"v1", "u3"}));
    CHECK(is_two_separation(g, lifted.vertices));
    // A set avoiding x̄ lifts unchanged.
    const VertexSet plain{*h.position_of_label("v1"), *h.position_of_label("v3")};
    if (is_two_separation(h, plain) || is_barrier(h, plain)) {
      CHECK(lift_from_contraction(g, h, xbar, u2, plain).vertices == by_labels(g, {"v1", "v3"}));
    }
    CHECK(code_of([&] { lift_from_contraction(g, h, xbar, u2, VertexSet{0, 1}); }) == ErrorCode::kBadCertificate);
  }
}
