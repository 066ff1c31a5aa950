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

#include "tightcut/graph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tightcut/error.hpp"

namespace tightcut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopRejected: return "LoopRejected";
    case ErrorCode::kBadVertex: return "BadVertex";
    case ErrorCode::kBadShore: return "BadShore";
    case ErrorCode::kGraphMismatch: return "GraphMismatch";
    case ErrorCode::kEvenShore: return "EvenShore";
    case ErrorCode::kNotMatchingCovered: return "NotMatchingCovered";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTrivialCut: return "TrivialCut";
    case ErrorCode::kNotTight: return "NotTight";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kBadCertificate: return "BadCertificate";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kBadSplice: return "BadSplice";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kUnknownGraph: return "UnknownGraph";
    case ErrorCode::kNeedExternalCorpus: return "NeedExternalCorpus";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

}  // namespace

MultiGraph::MultiGraph(std::vector<VertexInfo> vertices,
                       std::span<const std::pair<VertexId, VertexId>> edges,
                       VertexId next_id)
    : vertices_(std::move(vertices)) {
  if (static_cast<int>(vertices_.size()) > kMaxVertices) {
    throw Error(ErrorCode::kTooLarge,
                "graph has " + std::to_string(vertices_.size()) +
                    " vertices; the cap is " + std::to_string(kMaxVertices));
  }
  std::sort(vertices_.begin(), vertices_.end(),
            [](const VertexInfo& l, const VertexInfo& r) { return l.id < r.id; });
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].id == vertices_[i - 1].id) {
      throw Error(ErrorCode::kBadVertex,
                  "duplicate vertex id " + std::to_string(vertices_[i].id));
    }
  }
  next_id_ = next_id;
  for (auto& v : vertices_) {
    next_id_ = std::max(next_id_, v.id + 1);
    if (v.origin.empty()) v.origin = {v.id};
  }

  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) {
      throw Error(ErrorCode::kLoopRejected, "loop at vertex " + std::to_string(u));
    }
    const auto pu = position(u);
    const auto pv = position(v);
    if (!pu || !pv) {
      throw Error(ErrorCode::kBadVertex, "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) +
                                             ") has an unknown endpoint");
    }
    edges_.push_back(Edge{std::min(*pu, *pv), std::max(*pu, *pv)});
  }
  std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& l, const Edge& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });

  adjacency_.assign(vertices_.size(), VertexSet{});
  degree_.assign(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    adjacency_[e.a].insert(e.b);
    adjacency_[e.b].insert(e.a);
    ++degree_[e.a];
    ++degree_[e.b];
  }

  fingerprint_ = kFnvOffset;
  fnv_mix(fingerprint_, vertices_.size());
  for (const auto& v : vertices_) fnv_mix(fingerprint_, v.id);
  for (const Edge& e : edges_) {
    fnv_mix(fingerprint_, (std::uint64_t{id(e.a)} << 32) | id(e.b));
  }
}

VertexSet MultiGraph::neighborhood(VertexSet x) const {
  VertexSet out;
  for (int v : x) out |= adjacency_[v];
  return out - x;
}

int MultiGraph::multiplicity(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto lo = std::lower_bound(
      edges_.begin(), edges_.end(), Edge{a, b},
      [](const Edge& l, const Edge& r) { return l.a != r.a ? l.a < r.a : l.b < r.b; });
  int count = 0;
  for (auto it = lo; it != edges_.end() && it->a == a && it->b == b; ++it) ++count;
  return count;
}

std::optional<int> MultiGraph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto lo = std::lower_bound(
      edges_.begin(), edges_.end(), Edge{a, b},
      [](const Edge& l, const Edge& r) { return l.a != r.a ? l.a < r.a : l.b < r.b; });
  if (lo == edges_.end() || lo->a != a || lo->b != b) return std::nullopt;
  return static_cast<int>(lo - edges_.begin());
}

std::optional<int> MultiGraph::position(VertexId id) const {
  const auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), id,
      [](const VertexInfo& v, VertexId target) { return v.id < target; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> MultiGraph::position_of_label(std::string_view label) const {
  for (int p = 0; p < order(); ++p) {
    if (vertices_[p].label == label) return p;
  }
  return std::nullopt;
}

VertexSet MultiGraph::set_of_ids(std::span<const VertexId> ids) const {
  VertexSet out;
  for (VertexId id : ids) {
    const auto p = position(id);
    if (!p) throw Error(ErrorCode::kBadVertex, "unknown vertex id " + std::to_string(id));
    out.insert(*p);
  }
  return out;
}

VertexSet MultiGraph::set_of_labels(std::span<const std::string> labels) const {
  VertexSet out;
  for (const auto& label : labels) {
    const auto p = position_of_label(label);
    if (!p) throw Error(ErrorCode::kBadVertex, "unknown vertex label '" + label + "'");
    out.insert(*p);
  }
  return out;
}

std::vector<VertexId> MultiGraph::ids_of(VertexSet s) const {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (int p : s) out.push_back(id(p));
  return out;
}

std::vector<std::string> MultiGraph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int p : s) out.push_back(label(p));
  return out;
}

std::string MultiGraph::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (int p : s) {
    if (!first) out += ",";
    out += label(p);
    first = false;
  }
  return out + "}";
}

MultiGraph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list,
                       std::vector<std::string> labels) {
  if (vertex_count < 0) throw Error(ErrorCode::kBadParameter, "negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
    throw Error(ErrorCode::kBadParameter, "label count does not match vertex count");
  }
  std::vector<VertexInfo> vertices(vertex_count);
  for (int i = 0; i < vertex_count; ++i) {
    vertices[i].id = static_cast<VertexId>(i);
    vertices[i].label = labels.empty() ? std::to_string(i) : std::move(labels[i]);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) {
    if (u == v) throw Error(ErrorCode::kLoopRejected, "loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::kBadVertex, "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") is out of range");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return MultiGraph(std::move(vertices), edges);
}

MultiGraph contract(const MultiGraph& g, VertexSet x, std::string tag,
                    std::optional<VertexId> fresh) {
  if (x.empty() || !x.subset_of(g.all())) {
    throw Error(ErrorCode::kBadShore, "contracted set must be a nonempty subset of V(G)");
  }
  const VertexId new_id = fresh.value_or(g.next_id());
  if (g.position(new_id)) {
    throw Error(ErrorCode::kBadParameter,
                "fresh id " + std::to_string(new_id) + " is already in use");
  }
  std::vector<VertexInfo> vertices;
  vertices.reserve(g.order() - x.size() + 1);
  VertexInfo merged;
  merged.id = new_id;
  merged.label = std::move(tag);
  for (int p = 0; p < g.order(); ++p) {
    if (x.contains(p)) {
      merged.replaces.push_back(g.id(p));
      const auto& o = g.info(p).origin;
      merged.origin.insert(merged.origin.end(), o.begin(), o.end());
    } else {
      vertices.push_back(g.info(p));
    }
  }
  std::sort(merged.origin.begin(), merged.origin.end());
  vertices.push_back(std::move(merged));

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    const bool in_a = x.contains(e.a);
    const bool in_b = x.contains(e.b);
    if (in_a && in_b) continue;
    edges.emplace_back(in_a ? new_id : g.id(e.a), in_b ? new_id : g.id(e.b));
  }
  return MultiGraph(std::move(vertices), edges, std::max(g.next_id(), new_id + 1));
}

std::pair<MultiGraph, MultiGraph> cut_contractions(const MultiGraph& g, VertexSet x) {
  const VertexSet xbar = g.all() - x;
  if (x.empty() || xbar.empty() || !x.subset_of(g.all())) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
  const VertexId first = g.next_id();
  MultiGraph shrink_x = contract(g, x, g.format(x), first);
  MultiGraph shrink_xbar = contract(g, xbar, g.format(xbar), first + 1);
  return {shrink_x.with_next_id(first + 2), shrink_xbar.with_next_id(first + 2)};
}

std::vector<int> cut_edges(const MultiGraph& g, VertexSet x) {
  if (x.empty() || !x.subset_of(g.all()) || x == g.all()) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (x.contains(e.a) != x.contains(e.b)) out.push_back(i);
  }
  return out;
}

std::vector<int> edges_between(const MultiGraph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b) || !a.subset_of(g.all()) || !b.subset_of(g.all())) {
    throw Error(ErrorCode::kBadShore, "E[A,B] needs disjoint vertex sets of G");
  }
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if ((a.contains(e.a) && b.contains(e.b)) || (a.contains(e.b) && b.contains(e.a))) {
      out.push_back(i);
    }
  }
  return out;
}

VertexSet component_of(const MultiGraph& g, int start, VertexSet active) {
  VertexSet comp = VertexSet::single(start);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & active) - comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> components(const MultiGraph& g, VertexSet active) {
  std::vector<VertexSet> out;
  VertexSet rest = active;
  while (!rest.empty()) {
    const VertexSet c = component_of(g, rest.lowest(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool is_connected(const MultiGraph& g, VertexSet active) {
  if (active.empty()) return true;
  return component_of(g, active.lowest(), active) == active;
}

bool is_connected(const MultiGraph& g) { return is_connected(g, g.all()); }

bool is_bipartite(const MultiGraph& g) {
  std::vector<int> color(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int odd_component_count(const MultiGraph& g, VertexSet active) {
  int odd = 0;
  VertexSet rest = active;
  while (!rest.empty()) {
    const VertexSet c = component_of(g, rest.lowest(), rest);
    odd += c.odd() ? 1 : 0;
    rest -= c;
  }
  return odd;
}

ComponentReport removed_components(const MultiGraph& g, VertexSet s) {
  ComponentReport report;
  report.components = components(g, g.all() - s);
  for (VertexSet c : report.components) {
    if (c.odd()) {
      ++report.odd_count;
    } else {
      ++report.even_count;
    }
  }
  return report;
}

Cut::Cut(const MultiGraph& g, VertexSet shore)
    : shore_(shore), universe_(g.all()), graph_(g.fingerprint()) {
  if (shore.empty() || shore == universe_ || !shore.subset_of(universe_)) {
    throw Error(ErrorCode::kBadShore, "shore must be a nonempty proper subset of V(G)");
  }
}

VertexSet Cut::canonical() const {
  return shore_.contains(0) ? universe_ - shore_ : shore_;
}

bool shores_cross(VertexSet x, VertexSet y, VertexSet universe) {
  const VertexSet xb = universe - x;
  const VertexSet yb = universe - y;
  return x.intersects(y) && x.intersects(yb) && xb.intersects(y) && xb.intersects(yb);
}

bool cuts_cross(const Cut& a, const Cut& b) {
  if (a.graph() != b.graph() || a.universe() != b.universe()) {
    throw Error(ErrorCode::kGraphMismatch, "cuts belong to different graphs");
  }
  return shores_cross(a.shore(), b.shore(), a.universe());
}

}  // namespace tightcut
