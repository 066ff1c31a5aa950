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

#include "tightcut/elp.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

#include "tightcut/error.hpp"

namespace tightcut {

namespace {

// Deduplicates by canonical shore (first entry wins), then sorts.
std::vector<ElpCut> finish(std::vector<ElpCut> cuts) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<ElpCut> out;
  for (auto& c : cuts) {
    if (seen.insert(c.cut.canonical()).second) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const ElpCut& l, const ElpCut& r) {
    return size_lex_less(l.cut.canonical(), r.cut.canonical());
  });
  return out;
}

void check_subset(const MultiGraph& g, VertexSet s) {
  if (!s.subset_of(g.all())) throw Error(ErrorCode::kBadVertex, "set is not inside V(G)");
}

}  // namespace

std::vector<VertexSet> Barrier::odd_components() const {
  std::vector<VertexSet> out;
  for (VertexSet c : components) {
    if (c.odd()) out.push_back(c);
  }
  return out;
}

bool is_barrier(const MultiGraph& g, VertexSet b) {
  if (b.empty()) throw Error(ErrorCode::kEmptySet, "a barrier must be nonempty");
  check_subset(g, b);
  return odd_component_count(g, g.all() - b) == b.size();
}

std::optional<Barrier> make_barrier(const MultiGraph& g, VertexSet b) {
  if (!is_barrier(g, b)) return std::nullopt;
  Barrier out;
  out.vertices = b;
  out.components = components(g, g.all() - b);
  return out;
}

bool is_two_separation(const MultiGraph& g, VertexSet s) {
  check_subset(g, s);
  if (s.size() != 2) return false;
  const auto report = removed_components(g, s);
  return report.components.size() >= 2 && report.odd_count == 0;
}

std::optional<TwoSeparation> make_two_separation(const MultiGraph& g, VertexSet s) {
  if (!is_two_separation(g, s)) return std::nullopt;
  return TwoSeparation{s, components(g, g.all() - s)};
}

std::vector<Barrier> enumerate_nontrivial_barriers(const MultiGraph& g,
                                                   const BarrierSearchOptions& options) {
  if (g.order() > options.max_vertices) {
    throw Error(ErrorCode::kTooLarge, "barrier enumeration is capped at " +
                                          std::to_string(options.max_vertices) + " vertices");
  }
  const int n = g.order();
  std::vector<Barrier> found;
  // Independent sets in increasing position order; |B| <= n/2 since every
  // odd component needs a vertex outside B.
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet b, VertexSet allowed) {
    if (b.size() >= 2) {
      const auto report = removed_components(g, b);
      if (report.even_count == 0 && report.odd_count == b.size()) {
        found.push_back(Barrier{b, report.components, false});
      }
    }
    if (2 * (b.size() + 1) > n) return;
    for (int v : allowed) {
      const VertexSet later = VertexSet(allowed.bits() & ~((std::uint64_t{2} << v) - 1));
      grow(b | VertexSet::single(v), later - g.neighbors(v));
    }
  };
  grow(VertexSet{}, g.all());

  std::sort(found.begin(), found.end(), [](const Barrier& l, const Barrier& r) {
    return size_lex_less(l.vertices, r.vertices);
  });
  for (auto& b : found) {
    b.maximal = std::none_of(found.begin(), found.end(), [&](const Barrier& o) {
      return o.vertices != b.vertices && b.vertices.subset_of(o.vertices);
    });
  }
  return found;
}

std::vector<TwoSeparation> two_separations(const MultiGraph& g) {
  std::vector<TwoSeparation> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (auto s = make_two_separation(g, VertexSet{u, v})) out.push_back(std::move(*s));
    }
  }
  return out;
}

StructureIndex index_structure(const MultiGraph& g, const BarrierSearchOptions& options) {
  return StructureIndex{enumerate_nontrivial_barriers(g, options), two_separations(g)};
}

namespace {

void emit_barrier_cuts(const MultiGraph& g, const Barrier& b, bool include_trivial,
                       std::vector<ElpCut>& out) {
  for (VertexSet q : b.components) {
    if (!q.odd()) continue;
    Cut cut(g, q);
    if (cut.trivial() && !include_trivial) continue;
    out.push_back(ElpCut{cut, ElpKind::kBarrierCut, b.vertices, q, -1});
  }
}

}  // namespace

std::vector<ElpCut> barrier_cuts(const MultiGraph& g, const ElpOptions& options) {
  return barrier_cuts(g, index_structure(g, options.barrier_search), options);
}

std::vector<ElpCut> barrier_cuts(const MultiGraph& g, const StructureIndex& index,
                                 const ElpOptions& options) {
  std::vector<ElpCut> raw;
  for (const Barrier& b : index.barriers) {
    emit_barrier_cuts(g, b, options.include_trivial_cuts, raw);
  }
  return finish(std::move(raw));
}

std::optional<BarrierCutWitness> is_barrier_cut(const MultiGraph& g, VertexSet x) {
  const VertexSet xbar = g.all() - x;
  if (x.empty() || xbar.empty() || !x.subset_of(g.all())) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
  constexpr int kPoolLimit = 24;
  for (VertexSet q : {x, xbar}) {
    if (!q.odd() || !is_connected(g, q)) continue;
    const VertexSet forced = g.neighborhood(q);
    const VertexSet pool = g.all() - q - forced;
    if (pool.size() > kPoolLimit) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "barrier-cut search pool of " + std::to_string(pool.size()) + " vertices");
    }
    const int max_b = g.order() / 2;
    for (int k = 0; forced.size() + k <= max_b && k <= pool.size(); ++k) {
      std::optional<BarrierCutWitness> hit;
      for_each_subset_lex(pool, k, [&](VertexSet t) {
        const VertexSet b = forced | t;
        if (b.empty()) return true;
        if (odd_component_count(g, g.all() - b) != b.size()) return true;
        hit = BarrierCutWitness{*make_barrier(g, b), q};
        return false;
      });
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

std::vector<ElpCut> two_separation_cuts(const MultiGraph& g, const TwoSeparation& s) {
  const int k = static_cast<int>(s.components.size());
  if (k < 2 || k > 30) {
    throw Error(ErrorCode::kBadCertificate, "2-separation must leave 2..30 components");
  }
  std::vector<ElpCut> raw;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    VertexSet group;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) group |= s.components[i];
    }
    for (int apex : s.pair) {
      Cut cut(g, group | VertexSet::single(apex));
      raw.push_back(ElpCut{cut, ElpKind::kTwoSeparationCut, s.pair, group, apex});
    }
  }
  return finish(std::move(raw));
}

std::vector<ElpCut> elp_set(const MultiGraph& g, const Cut& c, const ElpOptions& options) {
  return elp_set(g, index_structure(g, options.barrier_search), c, options);
}

std::vector<ElpCut> elp_set(const MultiGraph& g, const StructureIndex& index, const Cut& c,
                            const ElpOptions& options) {
  if (c.graph() != g.fingerprint() || c.universe() != g.all()) {
    throw Error(ErrorCode::kGraphMismatch, "cut does not belong to this graph");
  }
  if (c.trivial()) throw Error(ErrorCode::kTrivialCut, "ELP set needs a non-trivial cut");
  std::vector<ElpCut> raw;
  for (const Barrier& b : index.barriers) {
    if (!b.vertices.subset_of(c.shore()) && !b.vertices.subset_of(c.other_shore())) continue;
    std::vector<ElpCut> mine;
    emit_barrier_cuts(g, b, options.include_trivial_cuts, mine);
    for (auto& e : mine) {
      if (cuts_cross(e.cut, c)) {
        throw Error(ErrorCode::kInvariantViolation,
                    "sheltered barrier-cut " + g.format(e.cut.canonical()) +
                        " crosses " + g.format(c.canonical()));
      }
      raw.push_back(std::move(e));
    }
  }
  for (const TwoSeparation& s : index.separations) {
    for (auto& e : two_separation_cuts(g, s)) {
      if (e.cut.trivial() && !options.include_trivial_cuts) continue;
      if (!cuts_cross(e.cut, c)) raw.push_back(std::move(e));
    }
  }
  return finish(std::move(raw));
}

bool validate_elp_cut(const MultiGraph& g, const ElpCut& e) {
  if (e.cut.graph() != g.fingerprint() || e.cut.universe() != g.all()) return false;
  if (!e.certificate.subset_of(g.all()) || e.certificate.empty()) return false;
  if (e.kind == ElpKind::kBarrierCut) {
    if (!is_barrier(g, e.certificate) || !e.group.odd()) return false;
    const auto comps = components(g, g.all() - e.certificate);
    if (std::find(comps.begin(), comps.end(), e.group) == comps.end()) return false;
  } else {
    if (!is_two_separation(g, e.certificate) || !e.certificate.contains(e.apex)) return false;
    const auto comps = components(g, g.all() - e.certificate);
    int used = 0;
    for (VertexSet comp : comps) {
      if (comp.subset_of(e.group)) {
        ++used;
      } else if (comp.intersects(e.group)) {
        return false;
      }
    }
    if (!e.group.subset_of(g.all() - e.certificate)) return false;
    if (used == 0 || used == static_cast<int>(comps.size())) return false;
  }
  return Cut(g, e.shore()) == e.cut;
}

LiftedSet lift_from_contraction(const MultiGraph& g, const MultiGraph& h, VertexId xbar,
                                VertexId u2, VertexSet s_h) {
  const auto xbar_pos = h.position(xbar);
  const auto u2_pos = g.position(u2);
  if (!xbar_pos) throw Error(ErrorCode::kBadVertex, "x̄ is not a vertex of H");
  if (!u2_pos) throw Error(ErrorCode::kBadVertex, "u2 is not a vertex of G");
  if (s_h.empty() || !s_h.subset_of(h.all())) {
    throw Error(ErrorCode::kBadCertificate, "S_H must be a nonempty subset of V(H)");
  }
  LiftedSet out;
  if (is_two_separation(h, s_h)) {
    out.kind = SeparatorKind::kTwoSeparation;
  } else if (is_barrier(h, s_h)) {
    out.kind = SeparatorKind::kBarrier;
  } else {
    throw Error(ErrorCode::kBadCertificate,
                h.format(s_h) + " is neither a barrier nor a 2-separation of H");
  }
  for (int p : s_h) {
    if (p == *xbar_pos) {
      out.vertices.insert(*u2_pos);
      continue;
    }
    const auto q = g.position(h.id(p));
    if (!q) {
      throw Error(ErrorCode::kBadCertificate,
                  "vertex " + h.label(p) + " of H has no counterpart in G");
    }
    out.vertices.insert(*q);
  }
  return out;
}

}  // namespace tightcut
