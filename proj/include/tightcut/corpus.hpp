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

#ifndef TIGHTCUT_CORPUS_HPP_
#define TIGHTCUT_CORPUS_HPP_

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

// H_n on v1..v_{2n+1}, u1..u_{2n+1} (ids 0..2n are v, 2n+1.. are u):
// two paths plus v_i v_{i+2}, v_i u_i, v_i u_{i+2}, u_i u_{i+2} for odd i,
// v_i u_{i+1} for i <= 2n, and v_{2n+1} u_{2n+1}. Throws kBadParameter for n < 1.
MultiGraph gen_h_n(int n);

// H'_n for even n >= 4 on v1..v_{2n+1}, u0, u1, u2: the path v1..v_{2n+1}
// with v_i v_{i+2} (odd i), the path u1 u0 u2, u1 v_{2i} (i = 2, 4, .., n),
// u2 v_{2i} (i = 1, 3, .., n-1), u1 v1 and u2 v_{2n+1}.
MultiGraph gen_h_n_prime(int n);

struct SpliceResult {
  MultiGraph graph;
  // Id in the splice of every vertex of the second graph.
  std::map<VertexId, VertexId> second_ids;

  VertexId map_second(VertexId id) const { return second_ids.at(id); }
};

// Glues G1 and G2 along a shared edge xy: the splice keeps G1's ids, gives
// the other vertices of G2 fresh ids, and carries xy once. Both graphs need
// vertices x, y joined with the same multiplicity; throws kBadSplice.
SpliceResult edge_splice(const MultiGraph& g1, const MultiGraph& g2, VertexId x, VertexId y);

// H_n assembled from 2n copies of K4 by successive edge splices.
MultiGraph k4_splice_chain(int n);

// "k4", "k3,3" (or "k33"), "c4", "c6", "prism", "petersen". Throws kUnknownGraph.
MultiGraph gen_named(std::string_view name);

// Certificate of the isomorphism class: vertex count plus the multiplicity
// matrix under a canonical labelling found by colour refinement with
// individualization. Labels and ids are ignored.
std::string canonical_form(const MultiGraph& g);
bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

// Connected simple graphs on exactly n vertices up to isomorphism, for
// 1 <= n <= kBuiltinCorpusLimit, in canonical-form order.
inline constexpr int kBuiltinCorpusLimit = 8;
std::vector<MultiGraph> connected_graphs(int n);

struct CorpusClassStats {
  std::size_t scanned = 0;
  std::size_t emitted = 0;
};

struct CorpusManifest {
  std::string source;
  int max_vertices = 0;
  bool matching_covered_only = true;
  std::map<int, CorpusClassStats> classes;
  std::size_t skipped = 0;  // lines over the vertex cap

  std::size_t emitted() const;
};

struct CorpusEntry {
  MultiGraph graph;
  std::string name;
};

// Sequential producer of corpus graphs. The manifest fills as the stream is
// consumed.
class CorpusStream {
 public:
  // Every connected graph on up to max_vertices vertices; throws
  // kNeedExternalCorpus above kBuiltinCorpusLimit.
  static CorpusStream builtin(int max_vertices, bool matching_covered_only = true);
  // One graph6 line per graph. Lines that fail to parse throw kParseError.
  static CorpusStream graph6_file(const std::string& path, int max_vertices,
                                  bool matching_covered_only = true);

  std::optional<CorpusEntry> next();
  std::vector<CorpusEntry> drain();
  const CorpusManifest& manifest() const { return manifest_; }

 private:
  CorpusStream() = default;

  CorpusManifest manifest_;
  // builtin
  int class_n_ = 0;
  std::vector<MultiGraph> class_graphs_;
  std::size_t class_index_ = 0;
  // graph6
  std::shared_ptr<std::istream> input_;
  std::size_t line_ = 0;
};

// The matching covered graphs among the built-in corpus; max_vertices must be
// even and >= 2. Throws kBadParameter / kNeedExternalCorpus.
CorpusStream enumerate_matching_covered(int max_vertices);

// G(n, p) conditioned on being matching covered, by rejection. Throws
// kSearchBudgetExceeded after `attempts` draws.
MultiGraph random_matching_covered(int n, double p, std::mt19937_64& rng,
                                   int attempts = 100000);

// Uniform integer in [0, bound) from the raw 64-bit stream, so shuffles are
// identical across standard libraries.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

template <typename T>
void shuffle_portable(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[draw_below(rng, i)]);
  }
}

}  // namespace tightcut

#endif  // TIGHTCUT_CORPUS_HPP_
