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

// Corpus sweeps that check the structural theorems graph by graph.
//
// Claims, by key:
//   1.1     a graph with a non-trivial tight cut has a non-trivial barrier
//           or a 2-separation
//   1.2     |ELP(C)| >= 1 for every non-trivial tight cut C
//   1.3     every non-trivial tight cut is a barrier-cut or an essential
//           GS-cut
//   3.3     |ELP(C)| >= 2 for every non-trivial GS-cut C
//   3.3*    the same, restricted to GS-cuts that are not ELP-cuts themselves
//   2.1       perfect matching search agrees with the Tutte condition;
//             matching coveredness agrees with matching enumeration
//   2.2       non-trivial barriers are independent with no even component,
//             and the pruned barrier search finds exactly the brute-force set
//   2.3       uncrossing of tight cuts with odd intersection
//   2.4       both contractions of a tight cut are matching covered and tight
//             cuts transfer between G and each contraction
//   2.5       both shores of every tight cut induce connected subgraphs
//   2.6       barriers and 2-separations lift from a 2-separation cut's
//             contraction
//   2conn     matching covered graphs on >= 4 vertices are 2-connected
//   3.1       random splices of bicritical corpus graphs (sweep level)
//   3.2       every shore accepted as GS or essential GS is tight
//   elp-tight every barrier-cut and 2-separation cut validates and is tight
//   cert      certificates survive a JSON round trip and re-validate
// "props" selects every key from 2.1 on.

#ifndef TIGHTCUT_VERIFY_HPP_
#define TIGHTCUT_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tightcut/corpus.hpp"
#include "tightcut/gscut.hpp"

namespace tightcut {

struct Counterexample {
  std::string graph_name;
  std::string graph_json;
  std::vector<std::string> shore;  // labels; empty for whole-graph claims
  std::string note;
};

struct ClaimTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<Counterexample> failures;  // first few only

  void merge(const ClaimTally& o, std::size_t keep);
};

struct SweepOptions {
  std::set<std::string> claims = {"1.1", "1.2", "1.3", "3.3", "3.3*"};
  int jobs = 1;
  std::size_t keep_failures = 10;
  EssentialSearchOptions essential;
};

struct SweepReport {
  std::size_t graphs = 0;
  std::size_t tight_cuts = 0;
  // Classification counters ("barrier-cut", "essential-gs", "essential-gs-empty",
  // "gs", "unclassified", ...).
  std::map<std::string, std::size_t> counters;
  std::map<std::string, ClaimTally> claims;
  double seconds = 0.0;

  bool clean() const;
};

// Every known claim key.
const std::vector<std::string>& known_claims();
// "props" expands to every property key. Throws kBadParameter on unknowns.
std::set<std::string> parse_claims(const std::string& csv);

SweepReport run_sweep(const std::vector<CorpusEntry>& corpus, const SweepOptions& options);

// Runs fn(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

struct OracleAgreement {
  std::size_t compared = 0;
  std::size_t disagreements = 0;
};

// Pairwise tightness against full enumeration on every odd shore.
OracleAgreement compare_tightness_exhaustive(const std::vector<CorpusEntry>& corpus, int jobs);
// Same on `samples` random (graph, odd shore) draws.
OracleAgreement compare_tightness_sampled(const std::vector<CorpusEntry>& corpus,
                                          std::size_t samples, std::uint64_t seed);

struct BrickInvariance {
  std::size_t graphs = 0;
  std::size_t runs = 0;
  std::size_t disagreements = 0;
  std::size_t invalid_trees = 0;
  std::vector<std::string> failures;
};

// `seeds` runs per strategy, both strategies; every tree is validated.
BrickInvariance check_brick_invariance(const std::vector<CorpusEntry>& corpus, int seeds,
                                       int jobs);

struct SpliceTrial {
  std::size_t trials = 0;
  std::size_t equivalence_failures = 0;
  std::size_t bicritical_failures = 0;
  std::size_t both_tight = 0;  // trials where both sides were tight
  std::vector<std::string> failures;
};

// Random splices of bicritical corpus graphs with random odd shores X_i
// holding x but not y.
SpliceTrial run_splice_trials(const std::vector<CorpusEntry>& bicritical, std::size_t trials,
                              std::uint64_t seed);

}  // namespace tightcut

#endif  // TIGHTCUT_VERIFY_HPP_
