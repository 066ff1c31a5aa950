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

#include <filesystem>
#include <fstream>
#include <random>

#include "helpers.hpp"
#include "tightcut/elp.hpp"
#include "tightcut/io.hpp"
#include "tightcut/matching.hpp"

using namespace testing;

TEST_SUITE("corpus") {
  TEST_CASE("H_n sizes follow the construction count") {
    for (int n = 1; n <= 6; ++n) {
      const MultiGraph g = gen_h_n(n);
      CHECK(g.order() == 4 * n + 2);
      CHECK(g.size() == 10 * n + 1);
      CHECK(is_bicritical(g));
      CHECK(g.position_of_label("v1").has_value());
      CHECK(g.position_of_label("u" + std::to_string(2 * n + 1)).has_value());
    }
    CHECK(code_of([] { gen_h_n(0); }) == ErrorCode::kBadParameter);
  }

  TEST_CASE("H_3 adjacency") {
    const MultiGraph g = gen_h_n(3);
    auto adj = [&](const char* a, const char* b) {
      return g.multiplicity(*g.position_of_label(a), *g.position_of_label(b)) == 1;
    };
    CHECK(adj("v1", "v3"));
    CHECK(adj("v1", "u1"));
    CHECK(adj("v1", "u3"));
    CHECK(adj("u1", "u3"));
    CHECK(adj("v2", "u3"));
    CHECK(adj("v6", "u7"));
    CHECK(adj("v7", "u7"));
    CHECK_FALSE(adj("v2", "v4"));
    CHECK_FALSE(adj("v2", "u2"));
  }

  TEST_CASE("H'_n sizes and matching coverage") {
    for (int n : {4, 6, 8}) {
      const MultiGraph g = gen_h_n_prime(n);
      CHECK(g.order() == 2 * n + 4);
      CHECK(g.size() == 4 * n + 4);
      CHECK(is_matching_covered(g));
    }
    CHECK(code_of([] { gen_h_n_prime(5); }) == ErrorCode::kBadParameter);
    CHECK(code_of([] { gen_h_n_prime(2); }) == ErrorCode::kBadParameter);
  }

  TEST_CASE("splicing 2n copies of K4 gives H_n") {
    for (int n = 1; n <= 4; ++n) CHECK(are_isomorphic(k4_splice_chain(n), gen_h_n(n)));
  }

  TEST_CASE("edge splice keeps ids of the first graph") {
    const MultiGraph k4 = gen_named("k4");
    const SpliceResult s = edge_splice(k4, k4, 0, 1);
    CHECK(s.graph.order() == 6);
    CHECK(s.graph.size() == 11);
    CHECK(is_bicritical(s.graph));
    CHECK(are_isomorphic(s.graph, gen_h_n(1)));
    CHECK(s.map_second(0) == 0);
    CHECK(s.map_second(1) == 1);
    CHECK(s.map_second(2) >= 4);
    CHECK(is_two_separation(s.graph, VertexSet{0, 1}));
    const MultiGraph c4 = gen_named("c4");
    CHECK(code_of([&] { edge_splice(c4, c4, 0, 2); }) == ErrorCode::kBadSplice);
    CHECK(code_of([&] { edge_splice(c4, c4, 0, 0); }) == ErrorCode::kBadSplice);
  }

  TEST_CASE("splices of bicritical graphs stay bicritical") {
    std::vector<MultiGraph> bi;
    for (const auto& e : mc_corpus(6)) {
      if (e.graph.order() >= 4 && is_bicritical(e.graph)) bi.push_back(e.graph);
    }
    REQUIRE(bi.size() > 3);
    for (const auto& a : bi) {
      const Edge e = a.edge(0);
      for (const auto& b : bi) {
        const Edge f = b.edge(b.size() - 1);
        // Move b's chosen edge onto a's ends.
        std::vector<VertexInfo> info;
        std::map<VertexId, VertexId> to;
        VertexId next = 100;
        for (int p = 0; p < b.order(); ++p) {
          VertexInfo v = b.info(p);
          v.id = p == f.a ? a.id(e.a) : p == f.b ? a.id(e.b) : next++;
          v.origin.clear();
          to[b.id(p)] = v.id;
          info.push_back(v);
        }
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const Edge& d : b.edges()) edges.emplace_back(to[b.id(d.a)], to[b.id(d.b)]);
        const MultiGraph moved(info, edges);
        const auto s = edge_splice(a, moved, a.id(e.a), a.id(e.b));
        CHECK(brute::bicritical(s.graph));
      }
    }
  }

  TEST_CASE("named graphs") {
    CHECK(gen_named("k4").size() == 6);
    CHECK(gen_named("petersen").order() == 10);
    CHECK(gen_named("petersen").size() == 15);
    CHECK(gen_named("k33").size() == 9);
    CHECK(gen_named("prism").size() == 9);
    const MultiGraph c6 = gen_named("c6");
    for (int p = 0; p < 6; ++p) CHECK(c6.degree(p) == 2);
    CHECK(code_of([] { gen_named("k5"); }) == ErrorCode::kUnknownGraph);
  }

  TEST_CASE("canonical form ignores labels and vertex order") {
    const MultiGraph a = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
    const MultiGraph b = graph_of(5, {{4, 3}, {3, 2}, {2, 1}, {1, 0}, {3, 1}});
    const MultiGraph c = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));
    CHECK(are_isomorphic(gen_named("prism"), graph_of(6, {{0, 2}, {2, 4}, {4, 0}, {1, 3}, {3, 5}, {5, 1}, {0, 1}, {2, 3}, {4, 5}})));
    CHECK_FALSE(are_isomorphic(gen_named("prism"), gen_named("k3,3")));
  }

  TEST_CASE("canonical form survives random relabelling") {
    std::mt19937_64 rng(3);
    for (const auto& e : mc_corpus(8)) {
      if (std::hash<std::string>{}(e.name) % 13 != 0) continue;
      const MultiGraph& g = e.graph;
      std::vector<int> perm(g.order());
      for (int i = 0; i < g.order(); ++i) perm[i] = i;
      shuffle_portable(perm, rng);
      std::vector<std::pair<int, int>> edges;
      for (const Edge& d : g.edges()) edges.emplace_back(perm[d.a], perm[d.b]);
      CHECK(canonical_form(build_graph(g.order(), edges)) == canonical_form(g));
    }
  }

  TEST_CASE("connected graph counts") {
    // Connected unlabelled graphs on n vertices, n = 1..8.
    const std::vector<std::size_t> known = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) CHECK(connected_graphs(n).size() == known[n - 1]);
    CHECK(code_of([] { connected_graphs(9); }) == ErrorCode::kNeedExternalCorpus);
  }

  TEST_CASE("built-in matching covered corpus") {
    auto stream = CorpusStream::builtin(8);
    const auto all = stream.drain();
    CHECK(all.size() == 3171);
    CHECK(stream.manifest().emitted() == 3171);
    CHECK(stream.manifest().classes.at(8).scanned == 11117);
    CHECK(stream.manifest().classes.at(8).emitted == 3144);
    for (const auto& e : mc_corpus(6)) CHECK(brute::matching_covered(e.graph));
    auto four = enumerate_matching_covered(4).drain();
    CHECK(four.size() == 3);  // K2, C4, K4
    CHECK(code_of([] { enumerate_matching_covered(5); }) == ErrorCode::kBadParameter);
    CHECK(code_of([] { enumerate_matching_covered(10); }) == ErrorCode::kNeedExternalCorpus);
  }

  TEST_CASE("graph6 corpus file with filter and cap") {
    const auto path = std::filesystem::temp_directory_path() / "tightcut_corpus_test.g6";
    {
      std::ofstream out(path);
      out << to_graph6(gen_named("k4")) << "\n"
          << to_graph6(graph_of(4, {{0, 1}, {1, 2}, {2, 3}})) << "\n"
          << to_graph6(gen_named("petersen")) << "\n"
          << "\n";
    }
    auto s = CorpusStream::graph6_file(path.string(), 8);
    const auto got = s.drain();
    REQUIRE(got.size() == 1);
    CHECK(got[0].graph.size() == 6);
    CHECK(s.manifest().skipped == 1);
    auto loose = CorpusStream::graph6_file(path.string(), 10, false);
    CHECK(loose.drain().size() == 3);
    std::filesystem::remove(path);
  }

  TEST_CASE("random matching covered draws") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) CHECK(brute::matching_covered(random_matching_covered(8, 0.4, rng)));
    std::mt19937_64 a(9), b(9);
    CHECK(random_matching_covered(10, 0.3, a).fingerprint() == random_matching_covered(10, 0.3, b).fingerprint());
  }

  TEST_CASE("portable shuffle is reproducible") {
    std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7};
    std::mt19937_64 rng(42);
    shuffle_portable(v, rng);
    std::vector<int> w = {0, 1, 2, 3, 4, 5, 6, 7};
    std::mt19937_64 rng2(42);
    shuffle_portable(w, rng2);
    CHECK(v == w);
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  }
}
