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

#include "tightcut/gscut.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tightcut/corpus.hpp"
#include "tightcut/error.hpp"

namespace tightcut {

std::vector<TwoSeparation> associated_family(std::span<const TwoSeparation> separations,
                                             VertexSet x) {
  std::vector<TwoSeparation> out;
  for (const auto& s : separations) {
    if ((s.pair & x).size() == 1) out.push_back(s);
  }
  return out;
}

std::vector<TwoSeparation> associated_family(const MultiGraph& g, VertexSet x) {
  return associated_family(two_separations(g), x);
}

std::vector<EndSeparation> end_2_separations(const MultiGraph& g,
                                             std::span<const TwoSeparation> family) {
  std::vector<EndSeparation> out;
  const int k = static_cast<int>(family.size());
  for (int i = 0; i < k; ++i) {
    VertexSet touched;
    for (int j = 0; j < k; ++j) {
      if (j != i) touched |= family[i].pair & family[j].pair;
    }
    if (touched.size() > 1) continue;
    EndSeparation end{i, VertexSet{}};
    for (VertexSet y : components(g, g.all() - family[i].pair)) {
      const VertexSet closed = y | family[i].pair;
      const bool bare = std::none_of(family.begin(), family.end(), [&](const TwoSeparation& f) {
        return f.pair != family[i].pair && f.pair.subset_of(closed);
      });
      if (bare) {
        end.component = y;
        break;
      }
    }
    out.push_back(end);
  }
  return out;
}

std::vector<int> GSCertificate::chain(int from, int to) const {
  auto up = [&](int v) {
    std::vector<int> path{v};
    while (chain_parent[path.back()] >= 0) path.push_back(chain_parent[path.back()]);
    return path;
  };
  std::vector<int> a = up(from);
  std::vector<int> b = up(to);
  // Strip the shared tail above the meeting point.
  while (a.size() >= 2 && b.size() >= 2 && a[a.size() - 2] == b[b.size() - 2]) {
    a.pop_back();
    b.pop_back();
  }
  b.pop_back();
  a.insert(a.end(), b.rbegin(), b.rend());
  return a;
}

std::string_view gs_failure_name(GsFailure f) {
  switch (f) {
    case GsFailure::kNone: return "none";
    case GsFailure::kEmptyFamily: return "empty-family";
    case GsFailure::kUncoveredEdge: return "uncovered-edge";
    case GsFailure::kDisconnectedFamily: return "disconnected-family";
    case GsFailure::kOddComponentSide: return "odd-component-side";
    case GsFailure::kEvenComponentSplit: return "even-component-split";
    case GsFailure::kEndComponentSplit: return "end-component-split";
  }
  return "unknown";
}

namespace {

bool one_side(VertexSet s, VertexSet x) { return s.subset_of(x) || !s.intersects(x); }

// Conditions (b)-(d). Fills chain_parent on success.
GsFailure numbered_conditions(const MultiGraph& g, VertexSet x,
                              const std::vector<TwoSeparation>& family,
                              std::vector<int>& parent, std::string& detail) {
  const int k = static_cast<int>(family.size());
  parent.assign(k, -1);
  if (k == 0) return GsFailure::kNone;
  std::vector<bool> seen(k, false);
  seen[0] = true;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int i = queue[head];
    for (int j = 0; j < k; ++j) {
      if (!seen[j] && (family[i].pair & family[j].pair).size() == 1) {
        seen[j] = true;
        parent[j] = i;
        queue.push_back(j);
      }
    }
  }
  if (static_cast<int>(queue.size()) != k) {
    const int stray = static_cast<int>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    detail = "no chain from " + g.format(family[0].pair) + " to " + g.format(family[stray].pair);
    return GsFailure::kDisconnectedFamily;
  }

  for (const auto& f : family) {
    for (const auto& fp : family) {
      const VertexSet meet = f.pair & fp.pair;
      if (meet.size() != 1) continue;
      const VertexSet far = meet.subset_of(x) ? g.all() - x : x;
      for (VertexSet y : f.components) {
        for (VertexSet yp : fp.components) {
          if (y == yp || !y.subset_of(yp)) continue;
          for (VertexSet c : components(g, yp - (y | f.pair))) {
            if (c.odd() && !c.subset_of(far)) {
              detail = "odd component " + g.format(c) + " for F=" + g.format(f.pair) +
                       ", F'=" + g.format(fp.pair) + " leaves the shore opposite " +
                       g.format(meet);
              return GsFailure::kOddComponentSide;
            }
            if (!c.odd() && !one_side(c, x)) {
              detail = "even component " + g.format(c) + " for F=" + g.format(f.pair) +
                       ", F'=" + g.format(fp.pair) + " meets both shores";
              return GsFailure::kEvenComponentSplit;
            }
          }
        }
      }
    }
  }

  for (const auto& f : family) {
    for (VertexSet y : f.components) {
      const VertexSet closed = y | f.pair;
      const bool bare = std::none_of(family.begin(), family.end(), [&](const TwoSeparation& o) {
        return o.pair != f.pair && o.pair.subset_of(closed);
      });
      if (bare && !one_side(y, x)) {
        detail = "component " + g.format(y) + " of G-" + g.format(f.pair) +
                 " holds no other separation but meets both shores";
        return GsFailure::kEndComponentSplit;
      }
    }
  }
  return GsFailure::kNone;
}

}  // namespace

GsOutcome check_gs(const MultiGraph& g, VertexSet x, std::span<const TwoSeparation> separations) {
  if (x.empty() || x == g.all() || !x.subset_of(g.all())) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
  GsOutcome out;
  std::vector<TwoSeparation> family = associated_family(separations, x);
  std::vector<int> parent;
  std::string numbered_detail;
  const GsFailure numbered = numbered_conditions(g, x, family, parent, numbered_detail);
  out.accepted_without_coverage = numbered == GsFailure::kNone;

  if (family.empty()) {
    out.failure = GsFailure::kEmptyFamily;
    out.detail = "no 2-separation meets " + g.format(x) + " in exactly one vertex";
    return out;
  }
  VertexSet covered;
  for (const auto& f : family) covered |= f.pair;
  for (int e : cut_edges(g, x)) {
    const Edge& edge = g.edge(e);
    if (!covered.contains(edge.a) && !covered.contains(edge.b)) {
      out.failure = GsFailure::kUncoveredEdge;
      out.detail = "cut edge " + g.label(edge.a) + g.label(edge.b) + " has no end in the family";
      return out;
    }
  }
  if (numbered != GsFailure::kNone) {
    out.failure = numbered;
    out.detail = std::move(numbered_detail);
    return out;
  }
  GSCertificate cert;
  cert.ends = end_2_separations(g, family);
  cert.family = std::move(family);
  cert.chain_parent = std::move(parent);
  out.certificate = std::move(cert);
  return out;
}

std::optional<GSCertificate> is_gs_cut(const MultiGraph& g, VertexSet x) {
  return check_gs(g, x, two_separations(g)).certificate;
}

bool validate_gs_certificate(const MultiGraph& g, VertexSet x, const GSCertificate& cert) {
  if (x.empty() || x == g.all() || !x.subset_of(g.all())) return false;
  const std::vector<TwoSeparation> family = associated_family(g, x);
  if (family.size() != cert.family.size()) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].pair != cert.family[i].pair ||
        family[i].components != cert.family[i].components) {
      return false;
    }
  }
  const int k = static_cast<int>(family.size());
  if (static_cast<int>(cert.chain_parent.size()) != k || k == 0) return false;
  if (cert.chain_parent[0] != -1) return false;
  for (int i = 1; i < k; ++i) {
    // Every parent link must meet in one vertex and reach the root.
    int steps = 0;
    for (int v = i; v != 0; v = cert.chain_parent[v]) {
      const int p = cert.chain_parent[v];
      if (p < 0 || p >= k || ++steps > k) return false;
      if ((family[v].pair & family[p].pair).size() != 1) return false;
    }
  }
  const GsOutcome fresh = check_gs(g, x, two_separations(g));
  if (!fresh.certificate) return false;
  const auto& ends = fresh.certificate->ends;
  if (ends.size() != cert.ends.size()) return false;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i].index != cert.ends[i].index || ends[i].component != cert.ends[i].component) {
      return false;
    }
  }
  return true;
}

std::optional<VertexSet> barrier_region(const MultiGraph& g, VertexSet x, VertexSet b,
                                        BarrierContraction mode) {
  const VertexSet xbar = g.all() - x;
  VertexSet side;
  if (b.subset_of(x)) {
    side = x;
  } else if (b.subset_of(xbar)) {
    side = xbar;
  } else {
    return std::nullopt;
  }
  if (mode == BarrierContraction::kBarrierOnly) return b;
  const VertexSet far = g.all() - side;
  const VertexSet k = component_of(g, far.lowest(), g.all() - b);
  if (!far.subset_of(k)) return std::nullopt;
  return g.all() - k;
}

std::pair<MultiGraph, VertexSet> contract_barriers(const MultiGraph& g, VertexSet x,
                                                   std::vector<ContractedBarrier>& barriers) {
  MultiGraph h = g;
  std::vector<VertexId> x_ids;
  VertexSet merged;
  for (const auto& cb : barriers) {
    if (cb.region.intersects(merged)) {
      throw Error(ErrorCode::kBadCertificate, "contracted regions overlap");
    }
    merged |= cb.region;
  }
  for (int p : x - merged) x_ids.push_back(g.id(p));
  for (std::size_t i = 0; i < barriers.size(); ++i) {
    auto& cb = barriers[i];
    std::vector<VertexId> ids = g.ids_of(cb.region);
    const VertexSet in_h = h.set_of_ids(ids);
    const VertexId fresh = h.next_id();
    h = contract(h, in_h, "b" + std::to_string(i + 1) + "=" + g.format(cb.barrier.vertices));
    cb.vertex = fresh;
    if (cb.on_x_side) x_ids.push_back(fresh);
  }
  return {h, h.set_of_ids(x_ids)};
}

namespace {

struct FamilySearch {
  const MultiGraph& g;
  VertexSet x;
  const std::vector<TwoSeparation>& separations;
  const std::vector<Barrier>& barriers;
  const EssentialSearchOptions& options;
  EssentialOutcome& outcome;

  std::vector<ContractedBarrier> candidates;

  // Tries one barrier family; true when it yields a certificate.
  bool attempt(const std::vector<int>& chosen) {
    ++outcome.families_tried;
    if (outcome.families_tried > options.max_families) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "essential GS search passed " + std::to_string(options.max_families) +
                      " barrier families on " + g.format(x));
    }
    std::vector<ContractedBarrier> family;
    std::string name = "{";
    for (int i : chosen) {
      family.push_back(candidates[i]);
      name += (name.size() > 1 ? "," : "") + g.format(candidates[i].barrier.vertices);
    }
    name += "}";
    if (family.empty()) {
      const GsOutcome gs = check_gs(g, x, separations);
      if (!gs.certificate) {
        outcome.transcript.push_back("B={}: " + std::string(gs_failure_name(gs.failure)) +
                                     " (" + gs.detail + ")");
        return false;
      }
      EssentialGSCertificate cert;
      cert.mode = options.mode;
      cert.contracted = g;
      cert.shore_image = x;
      cert.inner = std::move(*gs.certificate);
      outcome.certificate = std::move(cert);
      return true;
    }
    auto [h, xh] = contract_barriers(g, x, family);
    if (xh.empty() || xh == h.all()) {
      outcome.transcript.push_back("B=" + name + ": contracted shore degenerates");
      return false;
    }
    const GsOutcome gs = check_gs(h, xh, two_separations(h));
    if (!gs.certificate) {
      outcome.transcript.push_back("B=" + name + ": " + std::string(gs_failure_name(gs.failure)) +
                                   " in G' (" + gs.detail + ")");
      return false;
    }
    for (auto& cb : family) {
      const int b = *h.position(cb.vertex);
      const auto& fam = gs.certificate->family;
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (fam[j].pair.contains(b)) {
          cb.separation = static_cast<int>(j);
          break;
        }
      }
      if (cb.separation < 0) {
        outcome.transcript.push_back("B=" + name + ": " + h.label(b) +
                                     " lies in no associated 2-separation of G'");
        return false;
      }
    }
    EssentialGSCertificate cert;
    cert.barriers = std::move(family);
    cert.mode = options.mode;
    cert.contracted = std::move(h);
    cert.shore_image = xh;
    cert.inner = std::move(*gs.certificate);
    outcome.certificate = std::move(cert);
    return true;
  }

  void run() {
    for (const Barrier& b : barriers) {
      const auto region = barrier_region(g, x, b.vertices, options.mode);
      if (!region) continue;
      ContractedBarrier cb;
      cb.barrier = b;
      cb.region = *region;
      cb.on_x_side = b.vertices.subset_of(x);
      candidates.push_back(std::move(cb));
    }
    const int m = static_cast<int>(candidates.size());
    std::vector<int> chosen;
    // Families of size k in lexicographic index order; candidates are
    // already ordered by size, then lexicographically.
    std::function<bool(int, int, VertexSet, VertexSet)> pick =
        [&](int start, int k, VertexSet used_b, VertexSet used_r) -> bool {
      if (k == 0) return attempt(chosen);
      for (int i = start; i < m; ++i) {
        const auto& cb = candidates[i];
        if (cb.barrier.vertices.intersects(used_b) || cb.region.intersects(used_r)) continue;
        chosen.push_back(i);
        const bool hit = pick(i + 1, k - 1, used_b | cb.barrier.vertices, used_r | cb.region);
        chosen.pop_back();
        if (hit) return true;
      }
      return false;
    };
    for (int k = 0; k <= std::min(options.max_barriers, m); ++k) {
      if (pick(0, k, VertexSet{}, VertexSet{})) return;
    }
    outcome.transcript.push_back("no family of at most " + std::to_string(options.max_barriers) +
                                 " sheltered barriers (" + std::to_string(m) +
                                 " candidates) yields a GS-cut");
  }
};

}  // namespace

std::optional<EssentialGSCertificate> is_essential_gs_cut(const MultiGraph& g, VertexSet x,
                                                          const EssentialSearchOptions& options) {
  CutAnalyzer analyzer(g, options);
  return analyzer.essential(x).certificate;
}

bool validate_essential_certificate(const MultiGraph& g, VertexSet x,
                                    const EssentialGSCertificate& cert) {
  if (x.empty() || x == g.all() || !x.subset_of(g.all())) return false;
  std::vector<ContractedBarrier> fresh;
  VertexSet used;
  for (const auto& cb : cert.barriers) {
    const VertexSet b = cb.barrier.vertices;
    if (b.size() < 2 || !b.subset_of(g.all()) || !is_barrier(g, b)) return false;
    if (b.intersects(used)) return false;
    used |= b;
    const auto region = barrier_region(g, x, b, cert.mode);
    if (!region || *region != cb.region) return false;
    if (cb.on_x_side != b.subset_of(x)) return false;
    ContractedBarrier copy = cb;
    copy.vertex = 0;
    fresh.push_back(std::move(copy));
  }
  MultiGraph h = g;
  VertexSet xh = x;
  if (!fresh.empty()) {
    try {
      std::tie(h, xh) = contract_barriers(g, x, fresh);
    } catch (const Error&) {
      return false;
    }
  }
  if (h.fingerprint() != cert.contracted.fingerprint() || xh != cert.shore_image) return false;
  if (!validate_gs_certificate(h, xh, cert.inner)) return false;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (fresh[i].vertex != cert.barriers[i].vertex) return false;
    const int sep = cert.barriers[i].separation;
    if (sep < 0 || sep >= static_cast<int>(cert.inner.family.size())) return false;
    const VertexSet f = cert.inner.family[sep].pair;
    if (!f.contains(*h.position(fresh[i].vertex)) || (f & xh).size() != 1) return false;
  }
  return true;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kBarrierCut: return "barrier-cut";
    case Verdict::kEssentialGSCut: return "essential-gs-cut";
    case Verdict::kUnclassified: return "unclassified";
  }
  return "unknown";
}

CutAnalyzer::CutAnalyzer(MultiGraph g, EssentialSearchOptions options)
    : graph_(std::move(g)), options_(options), oracle_(graph_) {}

bool CutAnalyzer::matching_covered() const {
  if (!matching_covered_) matching_covered_ = is_matching_covered(graph_);
  return *matching_covered_;
}

const std::vector<TwoSeparation>& CutAnalyzer::separations() const {
  if (!separations_) separations_ = two_separations(graph_);
  return *separations_;
}

const StructureIndex& CutAnalyzer::index() const {
  if (!index_) {
    index_ = StructureIndex{enumerate_nontrivial_barriers(graph_), separations()};
  }
  return *index_;
}

const std::vector<Barrier>& CutAnalyzer::barriers() const { return index().barriers; }

TightnessVerdict CutAnalyzer::tightness(VertexSet x) const {
  if (x.empty() || x == graph_.all() || !x.subset_of(graph_.all())) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
  if (!x.odd()) throw Error(ErrorCode::kEvenShore, "shore " + graph_.format(x) + " is even");
  return tightness_pairwise(oracle_, x);
}

std::vector<Cut> CutAnalyzer::nontrivial_tight_cuts() const {
  std::vector<Cut> out;
  for (VertexSet x : odd_shores(graph_, 3)) {
    // Both shores of a tight cut induce connected subgraphs.
    if (!is_connected(graph_, x) || !is_connected(graph_, graph_.all() - x)) continue;
    if (tightness_pairwise(oracle_, x).tight) out.emplace_back(graph_, x);
  }
  return out;
}

std::vector<ElpCut> CutAnalyzer::elp(const Cut& c) const { return elp_set(graph_, index(), c); }

GsOutcome CutAnalyzer::gs(VertexSet x) const { return check_gs(graph_, x, separations()); }

EssentialOutcome CutAnalyzer::essential(VertexSet x) const {
  if (x.empty() || x == graph_.all() || !x.subset_of(graph_.all())) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
  EssentialOutcome outcome;
  FamilySearch search{graph_, x, separations(), barriers(), options_, outcome, {}};
  search.run();
  return outcome;
}

TightCutClassification CutAnalyzer::classify_unchecked(VertexSet x) const {
  TightCutClassification out;
  if (auto w = is_barrier_cut(graph_, x)) {
    out.verdict = Verdict::kBarrierCut;
    out.transcript.push_back("barrier " + graph_.format(w->barrier.vertices) +
                             " has " + graph_.format(w->component) + " as an odd component");
    out.barrier = std::move(*w);
    return out;
  }
  out.transcript.push_back("barrier-cut: no barrier B with N(Q) ⊆ B ⊆ V-Q for either shore Q");
  EssentialOutcome e = essential(x);
  out.transcript.insert(out.transcript.end(), e.transcript.begin(), e.transcript.end());
  if (e.certificate) {
    out.verdict = Verdict::kEssentialGSCut;
    out.essential = std::move(e.certificate);
  }
  return out;
}

TightCutClassification CutAnalyzer::classify(VertexSet x) const {
  const Cut cut(graph_, x);
  if (cut.trivial()) throw Error(ErrorCode::kTrivialCut, graph_.format(x) + " is trivial");
  if (!matching_covered()) {
    throw Error(ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  if (!x.odd() || !tightness(x).tight) {
    throw Error(ErrorCode::kNotTight, "cut " + graph_.format(x) + " is not tight");
  }
  return classify_unchecked(x);
}

TightCutClassification classify_tight_cut(const MultiGraph& g, VertexSet x,
                                          const EssentialSearchOptions& options) {
  CutAnalyzer analyzer(g, options);
  return analyzer.classify(x);
}

SpliceTightness check_splice_tightness(const MultiGraph& g1, const MultiGraph& g2, VertexId x,
                                       VertexId y, std::span<const VertexId> x1,
                                       std::span<const VertexId> x2) {
  SpliceResult splice;
  try {
    splice = edge_splice(g1, g2, x, y);
  } catch (const Error& e) {
    throw Error(ErrorCode::kBadSplice, e.what());
  }
  const MultiGraph& g = splice.graph;
  const int px = *g.position(x);
  const int py = *g.position(y);
  if (!is_two_separation(g, VertexSet{px, py})) {
    throw Error(ErrorCode::kBadSplice, "{x,y} is not a 2-separation of the splice");
  }
  if (!is_matching_covered(g)) {
    throw Error(ErrorCode::kBadSplice, "the splice is not matching covered");
  }
  auto shore_in = [&](const MultiGraph& h, std::span<const VertexId> ids) {
    VertexSet s;
    try {
      s = h.set_of_ids(ids);
    } catch (const Error& e) {
      throw Error(ErrorCode::kBadSplice, e.what());
    }
    if (!s.odd() || !s.contains(*h.position(x)) || s.contains(*h.position(y))) {
      throw Error(ErrorCode::kBadSplice, "X_i must be odd, hold x and miss y");
    }
    return s;
  };
  const VertexSet s1 = shore_in(g1, x1);
  const VertexSet s2 = shore_in(g2, x2);
  std::vector<VertexId> joined(x1.begin(), x1.end());
  for (VertexId v : x2) joined.push_back(splice.map_second(v));
  const VertexSet s = g.set_of_ids(joined);

  SpliceTightness out;
  out.first = tightness_pairwise(PerfectMatchingOracle(g1), s1).tight;
  out.second = tightness_pairwise(PerfectMatchingOracle(g2), s2).tight;
  out.spliced = tightness_pairwise(PerfectMatchingOracle(g), s).tight;
  return out;
}

}  // namespace tightcut
