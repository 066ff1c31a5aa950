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

#ifndef TIGHTCUT_GRAPH_HPP_
#define TIGHTCUT_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightcut/vertex_set.hpp"

namespace tightcut {

using VertexId = std::uint32_t;

// An edge between two vertex positions, a < b. Parallel edges are separate
// entries; an edge is identified by its index in MultiGraph::edges().
struct Edge {
  int a = 0;
  int b = 0;

  int other(int end) const { return end == a ? b : a; }
  VertexSet ends() const { return VertexSet{a, b}; }
  bool operator==(const Edge&) const = default;
};

struct VertexInfo {
  VertexId id = 0;
  std::string label;
  // Ids (in the immediate parent graph) of the vertices this vertex replaced
  // when it was created by contraction; empty for an uncontracted vertex.
  std::vector<VertexId> replaces;
  // Ids of the vertices of the original input graph this vertex stands for.
  std::vector<VertexId> origin;
};

// Loopless multigraph with stable vertex ids. Vertices are stored sorted by
// id, so a vertex's position is its rank; all set algebra runs on positions.
// Values are immutable once built.
class MultiGraph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  MultiGraph() = default;
  // Edges refer to vertex ids. Throws kLoopRejected / kBadVertex / kTooLarge.
  MultiGraph(std::vector<VertexInfo> vertices,
             std::span<const std::pair<VertexId, VertexId>> edges,
             VertexId next_id = 0);

  int order() const { return static_cast<int>(vertices_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  VertexSet all() const { return VertexSet::prefix(order()); }

  VertexSet neighbors(int position) const { return adjacency_[position]; }
  // N(X): vertices outside X adjacent to some vertex of X.
  VertexSet neighborhood(VertexSet x) const;
  int degree(int position) const { return degree_[position]; }
  int multiplicity(int a, int b) const;
  // Lowest edge index joining a and b, if any.
  std::optional<int> edge_index(int a, int b) const;

  VertexId id(int position) const { return vertices_[position].id; }
  const std::string& label(int position) const { return vertices_[position].label; }
  const VertexInfo& info(int position) const { return vertices_[position]; }
  std::optional<int> position(VertexId id) const;
  std::optional<int> position_of_label(std::string_view label) const;
  VertexId next_id() const { return next_id_; }

  VertexSet set_of_ids(std::span<const VertexId> ids) const;
  VertexSet set_of_labels(std::span<const std::string> labels) const;
  std::vector<VertexId> ids_of(VertexSet s) const;
  std::vector<std::string> labels_of(VertexSet s) const;
  std::string format(VertexSet s) const;

  // Structural digest over ids and edges; two graphs built from the same ids
  // and edge multiset share it.
  std::uint64_t fingerprint() const { return fingerprint_; }

  // Copy whose next minted id is at least `next`.
  MultiGraph with_next_id(VertexId next) const {
    MultiGraph copy = *this;
    copy.next_id_ = std::max(next_id_, next);
    return copy;
  }

 private:
  std::vector<VertexInfo> vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::vector<int> degree_;
  VertexId next_id_ = 0;
  std::uint64_t fingerprint_ = 0;
};

// Graph on ids 0..vertex_count-1. Labels default to the decimal id.
MultiGraph build_graph(int vertex_count,
                       std::span<const std::pair<int, int>> edge_list,
                       std::vector<std::string> labels = {});

// G/(X -> x): X collapses to a single fresh vertex carrying `tag`; edges with
// exactly one end in X are redirected to it and edges inside X disappear.
// `fresh` defaults to G.next_id() and must not be an id already in use.
MultiGraph contract(const MultiGraph& g, VertexSet x, std::string tag,
                    std::optional<VertexId> fresh = std::nullopt);

// Both contractions of the cut with shore X: {G/(X->x), G/(X̄->x̄)}, minting
// two distinct ids.
std::pair<MultiGraph, MultiGraph> cut_contractions(const MultiGraph& g, VertexSet x);

// Indices of the edges of ∂(X).
std::vector<int> cut_edges(const MultiGraph& g, VertexSet x);
// Indices of the edges of E[A, B] for disjoint A, B.
std::vector<int> edges_between(const MultiGraph& g, VertexSet a, VertexSet b);

// Connected components of G[active], ordered by lowest member.
std::vector<VertexSet> components(const MultiGraph& g, VertexSet active);
VertexSet component_of(const MultiGraph& g, int start, VertexSet active);
bool is_connected(const MultiGraph& g, VertexSet active);
bool is_connected(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);
// o(G[active]): number of odd components.
int odd_component_count(const MultiGraph& g, VertexSet active);

struct ComponentReport {
  std::vector<VertexSet> components;
  int odd_count = 0;
  int even_count = 0;
};

// Components of G - S with their parity counts.
ComponentReport removed_components(const MultiGraph& g, VertexSet s);

// An edge cut ∂(X), identified by its unordered shore pair.
class Cut {
 public:
  Cut() = default;
  // Throws kBadShore unless X is a nonempty proper subset of V(G).
  Cut(const MultiGraph& g, VertexSet shore);

  VertexSet shore() const { return shore_; }
  VertexSet other_shore() const { return universe_ - shore_; }
  VertexSet universe() const { return universe_; }
  // The shore not containing position 0; equal cuts share it.
  VertexSet canonical() const;
  bool trivial() const { return shore_.size() == 1 || other_shore().size() == 1; }
  std::uint64_t graph() const { return graph_; }

  bool operator==(const Cut& o) const {
    return graph_ == o.graph_ && canonical() == o.canonical();
  }

 private:
  VertexSet shore_;
  VertexSet universe_;
  std::uint64_t graph_ = 0;
};

// True iff all four corners X∩Y, X∩Ȳ, X̄∩Y, X̄∩Ȳ are nonempty.
// Throws kGraphMismatch for cuts of different graphs.
bool cuts_cross(const Cut& a, const Cut& b);
inline bool is_laminar(const Cut& a, const Cut& b) { return !cuts_cross(a, b); }
// Same test on raw shores of one graph.
bool shores_cross(VertexSet x, VertexSet y, VertexSet universe);

}  // namespace tightcut

#endif  // TIGHTCUT_GRAPH_HPP_
