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

#include "tightcut/serialize.hpp"

#include <string>

#include "tightcut/error.hpp"

namespace tightcut {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kBadCertificate, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T read(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const Json::exception& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json graph_to_json(const MultiGraph& g) {
  Json j;
  j["n"] = g.order();
  Json ids = Json::array();
  Json labels = Json::object();
  Json provenance = Json::object();
  for (int p = 0; p < g.order(); ++p) {
    const auto& info = g.info(p);
    ids.push_back(info.id);
    labels[std::to_string(info.id)] = info.label;
    if (!info.replaces.empty()) {
      provenance[std::to_string(info.id)] = {{"replaces", info.replaces}, {"origin", info.origin}};
    }
  }
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.id(e.a), g.id(e.b)});
  j["ids"] = std::move(ids);
  j["labels"] = std::move(labels);
  j["edges"] = std::move(edges);
  j["next_id"] = g.next_id();
  if (!provenance.empty()) j["provenance"] = std::move(provenance);
  return j;
}

MultiGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw Error(ErrorCode::kParseError, "graph JSON needs \"n\" and \"edges\"");
    }
    const int n = j.at("n").get<int>();
    if (n < 0) throw Error(ErrorCode::kParseError, "negative vertex count");
    std::vector<VertexInfo> vertices(n);
    if (j.contains("ids")) {
      const auto ids = j.at("ids").get<std::vector<VertexId>>();
      if (static_cast<int>(ids.size()) != n) {
        throw Error(ErrorCode::kParseError, "\"ids\" length differs from n");
      }
      for (int i = 0; i < n; ++i) vertices[i].id = ids[i];
    } else {
      for (int i = 0; i < n; ++i) vertices[i].id = static_cast<VertexId>(i);
    }
    for (int i = 0; i < n; ++i) vertices[i].label = std::to_string(vertices[i].id);
    if (j.contains("labels")) {
      const Json& labels = j.at("labels");
      if (labels.is_array()) {
        if (static_cast<int>(labels.size()) != n) {
          throw Error(ErrorCode::kParseError, "\"labels\" length differs from n");
        }
        for (int i = 0; i < n; ++i) vertices[i].label = labels[i].get<std::string>();
      } else {
        for (auto& v : vertices) {
          const auto key = std::to_string(v.id);
          if (labels.contains(key)) v.label = labels.at(key).get<std::string>();
        }
      }
    }
    if (j.contains("provenance")) {
      const Json& prov = j.at("provenance");
      for (auto& v : vertices) {
        const auto key = std::to_string(v.id);
        if (!prov.contains(key)) continue;
        v.replaces = prov.at(key).value("replaces", std::vector<VertexId>{});
        v.origin = prov.at(key).value("origin", std::vector<VertexId>{});
      }
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParseError, "each edge must be a pair");
      }
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return MultiGraph(std::move(vertices), edges, j.value("next_id", VertexId{0}));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Json set_to_json(const MultiGraph& g, VertexSet s) { return g.ids_of(s); }

VertexSet set_from_json(const MultiGraph& g, const Json& j) {
  if (!j.is_array()) bad("vertex set must be an array");
  VertexSet out;
  for (const auto& item : j) {
    std::optional<int> p;
    if (item.is_number_unsigned() || item.is_number_integer()) {
      p = g.position(item.get<VertexId>());
    } else if (item.is_string()) {
      p = g.position_of_label(item.get<std::string>());
    }
    if (!p) bad("vertex " + item.dump() + " does not resolve in the graph");
    out.insert(*p);
  }
  return out;
}

Json labels_to_json(const MultiGraph& g, VertexSet s) { return g.labels_of(s); }

namespace {

Json sets_to_json(const MultiGraph& g, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(set_to_json(g, s));
  return out;
}

std::vector<VertexSet> sets_from_json(const MultiGraph& g, const Json& j) {
  if (!j.is_array()) bad("expected an array of vertex sets");
  std::vector<VertexSet> out;
  for (const auto& item : j) out.push_back(set_from_json(g, item));
  return out;
}

}  // namespace

Json barrier_to_json(const MultiGraph& g, const Barrier& b) {
  return {{"vertices", set_to_json(g, b.vertices)},
          {"labels", labels_to_json(g, b.vertices)},
          {"components", sets_to_json(g, b.components)},
          {"maximal", b.maximal}};
}

Barrier barrier_from_json(const MultiGraph& g, const Json& j) {
  Barrier b;
  b.vertices = set_from_json(g, field(j, "vertices"));
  b.components = sets_from_json(g, field(j, "components"));
  b.maximal = j.value("maximal", false);
  return b;
}

Json separation_to_json(const MultiGraph& g, const TwoSeparation& s) {
  return {{"pair", set_to_json(g, s.pair)},
          {"labels", labels_to_json(g, s.pair)},
          {"components", sets_to_json(g, s.components)}};
}

TwoSeparation separation_from_json(const MultiGraph& g, const Json& j) {
  return TwoSeparation{set_from_json(g, field(j, "pair")),
                       sets_from_json(g, field(j, "components"))};
}

Json elp_cut_to_json(const MultiGraph& g, const ElpCut& c) {
  Json j = {{"shore", set_to_json(g, c.cut.shore())},
            {"shore_labels", labels_to_json(g, c.cut.shore())},
            {"kind", c.kind == ElpKind::kBarrierCut ? "barrier-cut" : "two-separation-cut"},
            {"certificate", set_to_json(g, c.certificate)},
            {"group", set_to_json(g, c.group)}};
  j["apex"] = c.apex >= 0 ? Json(g.id(c.apex)) : Json(nullptr);
  return j;
}

ElpCut elp_cut_from_json(const MultiGraph& g, const Json& j) {
  ElpCut c;
  const auto kind = read<std::string>(j, "kind");
  if (kind == "barrier-cut") {
    c.kind = ElpKind::kBarrierCut;
  } else if (kind == "two-separation-cut") {
    c.kind = ElpKind::kTwoSeparationCut;
  } else {
    bad("unknown ELP cut kind '" + kind + "'");
  }
  try {
    c.cut = Cut(g, set_from_json(g, field(j, "shore")));
  } catch (const Error& e) {
    bad(e.what());
  }
  c.certificate = set_from_json(g, field(j, "certificate"));
  c.group = set_from_json(g, field(j, "group"));
  const Json& apex = field(j, "apex");
  if (!apex.is_null()) {
    const auto p = g.position(apex.get<VertexId>());
    if (!p) bad("apex does not resolve");
    c.apex = *p;
  }
  return c;
}

Json gs_certificate_to_json(const MultiGraph& g, const GSCertificate& c) {
  Json family = Json::array();
  for (const auto& s : c.family) family.push_back(separation_to_json(g, s));
  Json ends = Json::array();
  for (const auto& e : c.ends) {
    ends.push_back({{"index", e.index}, {"component", set_to_json(g, e.component)}});
  }
  return {{"family", std::move(family)}, {"chain_parent", c.chain_parent}, {"ends", std::move(ends)}};
}

GSCertificate gs_certificate_from_json(const MultiGraph& g, const Json& j) {
  GSCertificate c;
  for (const auto& s : field(j, "family")) c.family.push_back(separation_from_json(g, s));
  c.chain_parent = read<std::vector<int>>(j, "chain_parent");
  for (const auto& e : field(j, "ends")) {
    c.ends.push_back(EndSeparation{read<int>(e, "index"), set_from_json(g, field(e, "component"))});
  }
  return c;
}

Json essential_certificate_to_json(const MultiGraph& g, const EssentialGSCertificate& c) {
  Json barriers = Json::array();
  for (const auto& cb : c.barriers) {
    barriers.push_back({{"barrier", barrier_to_json(g, cb.barrier)},
                        {"region", set_to_json(g, cb.region)},
                        {"on_x_side", cb.on_x_side},
                        {"vertex", cb.vertex},
                        {"separation", cb.separation}});
  }
  return {{"mode", c.mode == BarrierContraction::kRegion ? "region" : "barrier-only"},
          {"barriers", std::move(barriers)},
          {"contracted", graph_to_json(c.contracted)},
          {"shore_image", set_to_json(c.contracted, c.shore_image)},
          {"inner", gs_certificate_to_json(c.contracted, c.inner)}};
}

EssentialGSCertificate essential_certificate_from_json(const MultiGraph& g, const Json& j) {
  EssentialGSCertificate c;
  const auto mode = read<std::string>(j, "mode");
  if (mode == "region") {
    c.mode = BarrierContraction::kRegion;
  } else if (mode == "barrier-only") {
    c.mode = BarrierContraction::kBarrierOnly;
  } else {
    bad("unknown contraction mode '" + mode + "'");
  }
  for (const auto& item : field(j, "barriers")) {
    ContractedBarrier cb;
    cb.barrier = barrier_from_json(g, field(item, "barrier"));
    cb.region = set_from_json(g, field(item, "region"));
    cb.on_x_side = read<bool>(item, "on_x_side");
    cb.vertex = read<VertexId>(item, "vertex");
    cb.separation = read<int>(item, "separation");
    c.barriers.push_back(std::move(cb));
  }
  try {
    c.contracted = graph_from_json(field(j, "contracted"));
  } catch (const Error& e) {
    bad(e.what());
  }
  c.shore_image = set_from_json(c.contracted, field(j, "shore_image"));
  c.inner = gs_certificate_from_json(c.contracted, field(j, "inner"));
  return c;
}

Json barrier_witness_to_json(const MultiGraph& g, const BarrierCutWitness& w) {
  return {{"barrier", barrier_to_json(g, w.barrier)}, {"component", set_to_json(g, w.component)}};
}

BarrierCutWitness barrier_witness_from_json(const MultiGraph& g, const Json& j) {
  return BarrierCutWitness{barrier_from_json(g, field(j, "barrier")),
                           set_from_json(g, field(j, "component"))};
}

Json classification_to_json(const MultiGraph& g, VertexSet x, const TightCutClassification& c) {
  Json j = {{"shore", set_to_json(g, x)},
            {"shore_labels", labels_to_json(g, x)},
            {"verdict", std::string(verdict_name(c.verdict))},
            {"transcript", c.transcript}};
  j["barrier"] = c.barrier ? barrier_witness_to_json(g, *c.barrier) : Json(nullptr);
  j["essential"] = c.essential ? essential_certificate_to_json(g, *c.essential) : Json(nullptr);
  return j;
}

Json tree_to_json(const DecompositionTree& t) {
  Json j = {{"graph", graph_to_json(t.graph)}};
  if (t.cut) {
    j["cut"] = set_to_json(t.graph, t.cut->shore());
    j["cut_labels"] = labels_to_json(t.graph, t.cut->shore());
  } else {
    j["cut"] = nullptr;
  }
  j["leaf"] = t.leaf ? Json(*t.leaf == LeafKind::kBrick ? "brick" : "brace") : Json(nullptr);
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(tree_to_json(c));
  j["children"] = std::move(children);
  return j;
}

Json manifest_to_json(const CorpusManifest& m) {
  Json classes = Json::object();
  for (const auto& [n, stats] : m.classes) {
    classes[std::to_string(n)] = {{"scanned", stats.scanned}, {"emitted", stats.emitted}};
  }
  return {{"source", m.source},
          {"max_vertices", m.max_vertices},
          {"matching_covered_only", m.matching_covered_only},
          {"classes", std::move(classes)},
          {"emitted", m.emitted()},
          {"skipped", m.skipped}};
}

}  // namespace tightcut
