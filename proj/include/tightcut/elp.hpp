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

// Barriers, 2-separations and the cuts they induce (ELP-cuts).
//
// A barrier is a nonempty B with o(G-B) = |B|; a barrier-cut is ∂(V(Q)) for
// an odd component Q of G-B. A 2-separation is a pair S whose removal leaves
// two or more components, all even; its cuts are ∂(V(G1)+u) and ∂(V(G1)+v)
// for every split of the components into nonempty groups G1, G2.
//
// All searches are exhaustive and meant for graphs of a few dozen vertices
// at most. Results are ordered by size, then lexicographically.

#ifndef TIGHTCUT_ELP_HPP_
#define TIGHTCUT_ELP_HPP_

#include <optional>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

struct Barrier {
  VertexSet vertices;
  // Components of G - B, ordered by lowest member.
  std::vector<VertexSet> components;
  // No other barrier found strictly contains this one.
  bool maximal = false;

  std::vector<VertexSet> odd_components() const;
  bool trivial() const { return vertices.size() < 2; }
};

struct TwoSeparation {
  VertexSet pair;
  std::vector<VertexSet> components;
};

enum class ElpKind { kBarrierCut, kTwoSeparationCut };

// A cut together with the structure that certifies it as an ELP-cut.
//  - barrier-cut: `certificate` is the barrier B, `group` the odd component Q
//    and the shore is Q.
//  - 2-separation cut: `certificate` is the pair {u, v}, `group` the union
//    V(G1) of some components of G - {u, v}, and the shore is V(G1) + apex.
struct ElpCut {
  Cut cut;
  ElpKind kind = ElpKind::kBarrierCut;
  VertexSet certificate;
  VertexSet group;
  int apex = -1;

  VertexSet shore() const {
    return kind == ElpKind::kBarrierCut ? group : group | VertexSet::single(apex);
  }
};

bool is_barrier(const MultiGraph& g, VertexSet b);
std::optional<Barrier> make_barrier(const MultiGraph& g, VertexSet b);
bool is_two_separation(const MultiGraph& g, VertexSet s);
std::optional<TwoSeparation> make_two_separation(const MultiGraph& g, VertexSet s);

struct BarrierSearchOptions {
  int max_vertices = 20;
};

// Every barrier with at least two vertices, for matching covered G. Only
// independent sets are tried and a candidate must leave no even component,
// since non-trivial barriers of matching covered graphs have both properties.
// Throws kTooLarge above options.max_vertices.
std::vector<Barrier> enumerate_nontrivial_barriers(const MultiGraph& g,
                                                   const BarrierSearchOptions& options = {});

std::vector<TwoSeparation> two_separations(const MultiGraph& g);

struct ElpOptions {
  bool include_trivial_cuts = false;
  BarrierSearchOptions barrier_search;
};

// Barriers and 2-separations of one graph, computed once and shared by the
// ELP and GS machinery.
struct StructureIndex {
  std::vector<Barrier> barriers;
  std::vector<TwoSeparation> separations;
};

StructureIndex index_structure(const MultiGraph& g, const BarrierSearchOptions& options = {});

// ∂(V(Q)) for every non-trivial barrier B and odd component Q, one entry per
// shore pair (the first certificate in search order wins).
std::vector<ElpCut> barrier_cuts(const MultiGraph& g, const ElpOptions& options = {});
std::vector<ElpCut> barrier_cuts(const MultiGraph& g, const StructureIndex& index,
                                 const ElpOptions& options = {});

struct BarrierCutWitness {
  Barrier barrier;
  // X or X̄, whichever is the odd component of G - B.
  VertexSet component;
};

// A barrier B that has G[X] or G[X̄] as an odd component of G - B, searching
// N(Q) ⊆ B ⊆ V - Q for Q = X, then Q = X̄. Candidates are ordered by size,
// then lexicographically; the candidate pool is capped at 24 vertices
// (kSearchBudgetExceeded beyond it). Throws kBadShore.
std::optional<BarrierCutWitness> is_barrier_cut(const MultiGraph& g, VertexSet x);

// All cuts of one 2-separation, one entry per shore pair.
std::vector<ElpCut> two_separation_cuts(const MultiGraph& g, const TwoSeparation& s);

// ELP_G(C): barrier-cuts certified by a non-trivial C-sheltered barrier
// (B inside one shore of C) plus 2-separation cuts laminar with C. Only
// non-trivial cuts count unless options say otherwise. Throws kTrivialCut.
std::vector<ElpCut> elp_set(const MultiGraph& g, const Cut& c, const ElpOptions& options = {});
std::vector<ElpCut> elp_set(const MultiGraph& g, const StructureIndex& index, const Cut& c,
                            const ElpOptions& options = {});

// Re-derives an ElpCut's claim from scratch.
bool validate_elp_cut(const MultiGraph& g, const ElpCut& cut);

enum class SeparatorKind { kBarrier, kTwoSeparation };

struct LiftedSet {
  VertexSet vertices;  // positions in G
  SeparatorKind kind = SeparatorKind::kBarrier;
};

// Carries a barrier or 2-separation S_H of H = G/(X̄ -> x̄) back to G, where
// ∂(X) is a 2-separation cut for {u1, u2} with u2 ∈ X̄: S_H itself if x̄ is
// not in it, otherwise S_H - x̄ + u2. Throws kBadCertificate when S_H is
// neither kind in H.
LiftedSet lift_from_contraction(const MultiGraph& g, const MultiGraph& h, VertexId xbar,
                                VertexId u2, VertexSet s_h);

}  // namespace tightcut

#endif  // TIGHTCUT_ELP_HPP_
