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

#include "tightcut/io.hpp"

#include <sstream>

#include "tightcut/error.hpp"
#include "tightcut/serialize.hpp"

namespace tightcut {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

MultiGraph parse_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw Error(ErrorCode::kParseError, "empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::kParseError, "graph6 byte out of range in '" + std::string(line) + "'");
    }
  }
  if (line[0] == 126) {
    throw Error(ErrorCode::kParseError, "graph6 orders above 62 exceed the vertex cap");
  }
  const int n = line[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) {
    throw Error(ErrorCode::kParseError, "graph6 line for n=" + std::to_string(n) + " needs " +
                                            std::to_string(1 + bytes) + " bytes, got " +
                                            std::to_string(line.size()));
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = line[1 + k / 6] - 63;
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

std::string to_graph6(const MultiGraph& g) {
  const int n = g.order();
  if (n > 62) throw Error(ErrorCode::kBadParameter, "graph6 writer handles n <= 62");
  for (const Edge& e : g.edges()) {
    if (g.multiplicity(e.a, e.b) > 1) {
      throw Error(ErrorCode::kBadParameter, "graph6 cannot carry parallel edges");
    }
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> words((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.neighbors(i).contains(j)) words[k / 6] |= 1 << (5 - k % 6);
    }
  }
  std::string out(1, static_cast<char>(n + 63));
  for (int w : words) out.push_back(static_cast<char>(w + 63));
  return out;
}

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "json") return GraphFormat::kJson;
  throw Error(ErrorCode::kParseError, "unknown graph format '" + std::string(name) + "'");
}

MultiGraph parse_graph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return graph_from_json(j);
}

std::string format_graph_json(const MultiGraph& g) { return graph_to_json(g).dump(); }

std::vector<MultiGraph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<MultiGraph> out;
  if (format == GraphFormat::kGraph6) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        out.push_back(parse_graph6(line));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(number) + ": " + e.what());
      }
    }
    return out;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(graph_from_json(item));
  } else {
    out.push_back(graph_from_json(j));
  }
  return out;
}

}  // namespace tightcut
