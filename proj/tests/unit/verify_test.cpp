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

#include <atomic>
#include <fstream>

#include "helpers.hpp"
#include "tightcut/elp.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/serialize.hpp"
#include "tightcut/verify.hpp"

using namespace testing;

#ifndef TIGHTCUT_ORACLE_COUNTS
#define TIGHTCUT_ORACLE_COUNTS ""
#endif

TEST_SUITE("verify") {
  TEST_CASE("claim selection") {
    CHECK(parse_claims("1.1, 3.3") == std::set<std::string>{"1.1", "3.3"});
    CHECK(parse_claims("props").count("2.2") == 1);
    CHECK(parse_claims("props").count("1.3") == 0);
    CHECK(parse_claims("all").size() == known_claims().size());
    CHECK(code_of([] { parse_claims("4.1"); }) == ErrorCode::kBadParameter);
    CHECK(code_of([] { parse_claims(""); }) == ErrorCode::kBadParameter);
  }

  TEST_CASE("parallel_for visits every index once and propagates errors") {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(100, 4, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                      if (i == 7) throw Error(ErrorCode::kInvariantViolation, "boom");
                    }),
                    Error);
  }

  TEST_CASE("sweep results do not depend on the worker count") {
    const auto& corpus = mc_corpus(6);
    SweepOptions one;
    one.claims = parse_claims("all");
    SweepOptions four = one;
    four.jobs = 4;
    const SweepReport a = run_sweep(corpus, one);
    const SweepReport b = run_sweep(corpus, four);
    CHECK(a.counters == b.counters);
    for (const auto& [k, t] : a.claims) {
      CHECK(b.claims.at(k).checked == t.checked);
      CHECK(b.claims.at(k).failed == t.failed);
    }
  }

  TEST_CASE("property claims hold on the 6-vertex corpus") {
    SweepOptions o;
    o.claims = parse_claims("props,1.1,1.2,1.3");
    const SweepReport r = run_sweep(mc_corpus(6), o);
    for (const auto& [k, t] : r.claims) {
      INFO(k);
      CHECK(t.failed == 0);
      CHECK(t.checked > 0);
    }
  }

  TEST_CASE("empty corpus is vacuous") {
    SweepOptions o;
    const SweepReport r = run_sweep({}, o);
    CHECK(r.graphs == 0);
    CHECK(r.clean());
  }

  TEST_CASE("counterexamples carry the graph and the shore") {
    SweepOptions o;
    o.claims = {"3.3"};
    o.keep_failures = 2;
    const std::vector<CorpusEntry> one = {{gen_h_n(1), "h1"}};
    const SweepReport r = run_sweep(one, o);
    const ClaimTally& t = r.claims.at("3.3");
    // Both sides of the central 2-separation are GS-cuts with a single ELP-cut.
    REQUIRE(t.failed == 2);
    REQUIRE(t.failures.size() == 2);
    CHECK(t.failures[0].graph_name == "h1");
    const MultiGraph back = graph_from_json(Json::parse(t.failures[0].graph_json));
    CHECK(back.fingerprint() == gen_h_n(1).fingerprint());
    CHECK(t.failures[0].shore.size() == 3);
  }

  TEST_CASE("oracle drivers") {
    const auto& corpus = mc_corpus(6);
    const auto ex = compare_tightness_exhaustive(corpus, 2);
    CHECK(ex.compared > 0);
    CHECK(ex.disagreements == 0);
    const auto sampled = compare_tightness_sampled(corpus, 200, 1);
    CHECK(sampled.compared == 200);
    CHECK(sampled.disagreements == 0);
    const auto bi = check_brick_invariance(corpus, 3, 2);
    CHECK(bi.runs == corpus.size() * 6);
    CHECK(bi.disagreements == 0);
    CHECK(bi.invalid_trees == 0);
  }

  TEST_CASE("library totals match the frozen brute-force counts") {
    const std::string path = TIGHTCUT_ORACLE_COUNTS;
    REQUIRE_FALSE(path.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const Json frozen = Json::parse(in);
    for (int n = 1; n <= 8; ++n) {
      INFO("n = " << n);
      const Json& want = frozen.at(std::to_string(n));
      const auto graphs = connected_graphs(n);
      CHECK(want.at("connected") == graphs.size());
      std::size_t mc = 0, bicritical = 0, tight = 0, barriers = 0, seps = 0, bricks = 0, braces = 0;
      for (const auto& g : graphs) {
        if (!is_matching_covered(g)) continue;
        ++mc;
        bicritical += g.order() < 4 ? brute::bicritical(g) : is_bicritical(g);
        const auto cuts = enumerate_tight_cuts(g, true);
        tight += cuts.size();
        barriers += enumerate_nontrivial_barriers(g).size();
        seps += two_separations(g).size();
        if (cuts.empty()) (is_bipartite(g) ? braces : bricks) += 1;
      }
      CHECK(want.at("matching_covered") == mc);
      CHECK(want.at("bicritical") == bicritical);
      CHECK(want.at("tight_cuts") == tight);
      CHECK(want.at("barriers") == barriers);
      CHECK(want.at("two_separations") == seps);
      CHECK(want.at("bricks") == bricks);
      CHECK(want.at("braces") == braces);
    }
  }

  TEST_CASE("splice trials") {
    std::vector<CorpusEntry> bi;
    for (const auto& e : mc_corpus(6)) {
      if (e.graph.order() >= 4 && is_bicritical(e.graph)) bi.push_back(e);
    }
    const SpliceTrial t = run_splice_trials(bi, 50, 3);
    CHECK(t.trials == 50);
    CHECK(t.equivalence_failures == 0);
    CHECK(t.bicritical_failures == 0);
    CHECK(t.both_tight > 0);
  }
}
