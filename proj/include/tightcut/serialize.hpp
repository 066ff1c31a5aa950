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

// JSON forms of graphs, cuts and certificates. Vertex sets are written as
// sorted id lists so a document stays meaningful for any graph built from
// the same ids; readers resolve ids against the graph they are given and
// throw kBadCertificate on anything that does not resolve.

#ifndef TIGHTCUT_SERIALIZE_HPP_
#define TIGHTCUT_SERIALIZE_HPP_

#include <json.hpp>

#include "tightcut/corpus.hpp"
#include "tightcut/decomp.hpp"
#include "tightcut/elp.hpp"
#include "tightcut/graph.hpp"
#include "tightcut/gscut.hpp"

namespace tightcut {

using Json = nlohmann::json;

Json graph_to_json(const MultiGraph& g);
// Accepts {"n", "edges", optional "labels", "ids", "provenance"}.
MultiGraph graph_from_json(const Json& j);

Json set_to_json(const MultiGraph& g, VertexSet s);
VertexSet set_from_json(const MultiGraph& g, const Json& j);
Json labels_to_json(const MultiGraph& g, VertexSet s);

Json barrier_to_json(const MultiGraph& g, const Barrier& b);
Barrier barrier_from_json(const MultiGraph& g, const Json& j);
Json separation_to_json(const MultiGraph& g, const TwoSeparation& s);
TwoSeparation separation_from_json(const MultiGraph& g, const Json& j);

Json elp_cut_to_json(const MultiGraph& g, const ElpCut& c);
ElpCut elp_cut_from_json(const MultiGraph& g, const Json& j);

Json gs_certificate_to_json(const MultiGraph& g, const GSCertificate& c);
GSCertificate gs_certificate_from_json(const MultiGraph& g, const Json& j);

// The contracted graph travels inside the document; the reader rebuilds it
// and validation recomputes it from G independently.
Json essential_certificate_to_json(const MultiGraph& g, const EssentialGSCertificate& c);
EssentialGSCertificate essential_certificate_from_json(const MultiGraph& g, const Json& j);

Json barrier_witness_to_json(const MultiGraph& g, const BarrierCutWitness& w);
BarrierCutWitness barrier_witness_from_json(const MultiGraph& g, const Json& j);

Json classification_to_json(const MultiGraph& g, VertexSet x, const TightCutClassification& c);

Json tree_to_json(const DecompositionTree& t);

Json manifest_to_json(const CorpusManifest& m);

}  // namespace tightcut

#endif  // TIGHTCUT_SERIALIZE_HPP_
