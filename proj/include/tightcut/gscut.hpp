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

// GS-cuts (generalized 2-separation cuts), essential GS-cuts and the
// barrier-cut / essential-GS classification of non-trivial tight cuts.
//
// For a cut ∂(X), the associated family 𝓕 is every 2-separation F with
// |F ∩ X| = 1. ∂(X) is a GS-cut when
//   (a) 𝓕 is nonempty and every edge of ∂(X) has an end in some F ∈ 𝓕;
//   (b) the graph on 𝓕 joining F, F' with |F ∩ F'| = 1 is connected;
//   (c) for F, F' with F ∩ F' = {w}, and components Y of G-F, Y' of G-F'
//       with Y ⊊ Y', each odd component of G[Y' - (Y ∪ F)] lies in the
//       shore not containing w and each even one lies in a single shore;
//   (d) for F ∈ 𝓕 and a component Y of G-F such that Y ∪ F holds no other
//       member of 𝓕, Y lies in one shore.

#ifndef TIGHTCUT_GSCUT_HPP_
#define TIGHTCUT_GSCUT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tightcut/elp.hpp"
#include "tightcut/graph.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

std::vector<TwoSeparation> associated_family(const MultiGraph& g, VertexSet x);
std::vector<TwoSeparation> associated_family(std::span<const TwoSeparation> separations,
                                             VertexSet x);

struct EndSeparation {
  int index = -1;       // into the family
  VertexSet component;  // V(G1): G1 ∪ F contains no other member of the family
};

// End-2-separations of a family: members F with some w such that
// F ∩ F' ⊆ {w} for every other member F'.
std::vector<EndSeparation> end_2_separations(const MultiGraph& g,
                                             std::span<const TwoSeparation> family);

struct GSCertificate {
  std::vector<TwoSeparation> family;
  // Spanning tree of the intersection graph on the family, rooted at 0;
  // chain(i, j) reads a witness sequence for condition (b) off it.
  std::vector<int> chain_parent;
  std::vector<EndSeparation> ends;

  std::vector<int> chain(int from, int to) const;
};

enum class GsFailure {
  kNone,
  kEmptyFamily,
  kUncoveredEdge,
  kDisconnectedFamily,
  kOddComponentSide,
  kEvenComponentSplit,
  kEndComponentSplit,
};

std::string_view gs_failure_name(GsFailure f);

struct GsOutcome {
  std::optional<GSCertificate> certificate;
  GsFailure failure = GsFailure::kNone;
  std::string detail;
  // Would the numbered conditions alone (without (a)) accept? Differs from
  // the verdict only when 𝓕 is empty or an edge is uncovered.
  bool accepted_without_coverage = false;
};

// GS check against a precomputed list of all 2-separations of G.
GsOutcome check_gs(const MultiGraph& g, VertexSet x,
                   std::span<const TwoSeparation> separations);

std::optional<GSCertificate> is_gs_cut(const MultiGraph& g, VertexSet x);

// Recomputes the family and conditions (a)-(d) and checks every recorded
// field of the certificate against them.
bool validate_gs_certificate(const MultiGraph& g, VertexSet x, const GSCertificate& cert);

enum class BarrierContraction {
  // Contract the side of B away from the far shore: V(G) - V(G1) where G1 is
  // the component of G - B holding the opposite shore.
  kRegion,
  // Contract B alone.
  kBarrierOnly,
};

struct ContractedBarrier {
  Barrier barrier;
  VertexSet region;     // positions in G that collapse to b
  bool on_x_side = false;
  VertexId vertex = 0;  // id of b in G'
  int separation = -1;  // index into inner.family of a member holding b
};

struct EssentialGSCertificate {
  std::vector<ContractedBarrier> barriers;
  BarrierContraction mode = BarrierContraction::kRegion;
  MultiGraph contracted;   // G'
  VertexSet shore_image;   // X' in G'
  GSCertificate inner;
};

struct EssentialSearchOptions {
  int max_barriers = 4;
  std::size_t max_families = 200000;
  BarrierContraction mode = BarrierContraction::kRegion;
};

struct EssentialOutcome {
  std::optional<EssentialGSCertificate> certificate;
  std::size_t families_tried = 0;
  std::vector<std::string> transcript;
};

// The region contracted for a sheltered barrier, or nothing when B is not
// sheltered or the far shore spreads over several components of G - B.
std::optional<VertexSet> barrier_region(const MultiGraph& g, VertexSet x, VertexSet b,
                                        BarrierContraction mode);

// Builds G' and X' for a family of barriers. Regions must be disjoint.
std::pair<MultiGraph, VertexSet> contract_barriers(const MultiGraph& g, VertexSet x,
                                                   std::vector<ContractedBarrier>& barriers);

// Searches barrier families 𝓑 by size, then lexicographically (𝓑 = ∅ is a
// plain GS check). Throws kSearchBudgetExceeded past options.max_families.
std::optional<EssentialGSCertificate> is_essential_gs_cut(
    const MultiGraph& g, VertexSet x, const EssentialSearchOptions& options = {});

bool validate_essential_certificate(const MultiGraph& g, VertexSet x,
                                    const EssentialGSCertificate& cert);

enum class Verdict { kBarrierCut, kEssentialGSCut, kUnclassified };
std::string_view verdict_name(Verdict v);

struct TightCutClassification {
  Verdict verdict = Verdict::kUnclassified;
  std::optional<BarrierCutWitness> barrier;
  std::optional<EssentialGSCertificate> essential;
  std::vector<std::string> transcript;
};

// Throws kBadShore, kTrivialCut, kNotMatchingCovered, kNotTight.
TightCutClassification classify_tight_cut(const MultiGraph& g, VertexSet x,
                                          const EssentialSearchOptions& options = {});

// Caches everything one graph's cut analyses share. Not thread-safe; each
// worker builds its own. Pinned in memory since the oracle points into it.
class CutAnalyzer {
 public:
  explicit CutAnalyzer(MultiGraph g, EssentialSearchOptions options = {});
  CutAnalyzer(const CutAnalyzer&) = delete;
  CutAnalyzer& operator=(const CutAnalyzer&) = delete;

  const MultiGraph& graph() const { return graph_; }
  bool matching_covered() const;
  const PerfectMatchingOracle& oracle() const { return oracle_; }
  const std::vector<TwoSeparation>& separations() const;
  const std::vector<Barrier>& barriers() const;
  const StructureIndex& index() const;

  // Pairwise tightness; shore sanity and parity only.
  TightnessVerdict tightness(VertexSet x) const;
  std::vector<Cut> nontrivial_tight_cuts() const;
  std::vector<ElpCut> elp(const Cut& c) const;
  GsOutcome gs(VertexSet x) const;
  EssentialOutcome essential(VertexSet x) const;
  // Skips the matching-covered and tightness preconditions.
  TightCutClassification classify_unchecked(VertexSet x) const;
  TightCutClassification classify(VertexSet x) const;

 private:
  MultiGraph graph_;
  EssentialSearchOptions options_;
  PerfectMatchingOracle oracle_;
  mutable std::optional<bool> matching_covered_;
  mutable std::optional<StructureIndex> index_;
  mutable std::optional<std::vector<TwoSeparation>> separations_;
};

struct SpliceTightness {
  bool first = false;    // ∂(X1) tight in G1
  bool second = false;   // ∂(X2) tight in G2
  bool spliced = false;  // ∂(X1 ∪ X2) tight in the splice
};

// X1 ⊆ V(G1) and X2 ⊆ V(G2) are given as vertex ids. Throws kBadSplice on
// any violated precondition (xy missing, {x, y} not a 2-separation of the
// splice, the splice not matching covered, |X_i| even, x ∉ X_i, y ∈ X_i).
SpliceTightness check_splice_tightness(const MultiGraph& g1, const MultiGraph& g2,
                                       VertexId x, VertexId y,
                                       std::span<const VertexId> x1,
                                       std::span<const VertexId> x2);

}  // namespace tightcut

#endif  // TIGHTCUT_GSCUT_HPP_
