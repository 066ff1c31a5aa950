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

#ifndef TIGHTCUT_IO_HPP_
#define TIGHTCUT_IO_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tightcut/graph.hpp"

namespace tightcut {

// Standard graph6 (simple graphs, n <= 62 here since the vertex cap is 64).
// An optional ">>graph6<<" header is accepted. Throws kParseError.
MultiGraph parse_graph6(std::string_view line);
// Throws kBadParameter for graphs with parallel edges.
std::string to_graph6(const MultiGraph& g);

enum class GraphFormat { kGraph6, kJson };

// Throws kParseError for unknown names.
GraphFormat parse_format(std::string_view name);

// graph6: one graph per nonempty line. JSON: one graph object, or an array
// of them, in the form {"n": 4, "edges": [[0,1], ...], "labels": [...]}.
std::vector<MultiGraph> read_graphs(std::istream& in, GraphFormat format);
MultiGraph parse_graph_json(std::string_view text);
std::string format_graph_json(const MultiGraph& g);

}  // namespace tightcut

#endif  // TIGHTCUT_IO_HPP_
