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

#include "tightcut/corpus.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_set>

#include "tightcut/error.hpp"
#include "tightcut/io.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

namespace {

std::string vlabel(int i) { return "v" + std::to_string(i); }
std::string ulabel(int i) { return "u" + std::to_string(i); }

}  // namespace

MultiGraph gen_h_n(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParameter, "H_n needs n >= 1");
  const int len = 2 * n + 1;
  auto v = [](int i) { return i - 1; };
  auto u = [len](int i) { return len + i - 1; };
  std::vector<std::string> labels;
  for (int i = 1; i <= len; ++i) labels.push_back(vlabel(i));
  for (int i = 1; i <= len; ++i) labels.push_back(ulabel(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < len; ++i) {
    edges.emplace_back(v(i), v(i + 1));
    edges.emplace_back(u(i), u(i + 1));
  }
  for (int i = 1; i <= 2 * n - 1; i += 2) {
    edges.emplace_back(v(i), v(i + 2));
    edges.emplace_back(v(i), u(i));
    edges.emplace_back(v(i), u(i + 2));
    edges.emplace_back(u(i), u(i + 2));
  }
  for (int i = 1; i <= 2 * n; ++i) edges.emplace_back(v(i), u(i + 1));
  edges.emplace_back(v(len), u(len));
  return build_graph(2 * len, edges, std::move(labels));
}

MultiGraph gen_h_n_prime(int n) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::kBadParameter, "H'_n needs even n >= 4");
  const int len = 2 * n + 1;
  auto v = [](int i) { return i - 1; };
  const int u0 = len;
  const int u1 = len + 1;
  const int u2 = len + 2;
  std::vector<std::string> labels;
  for (int i = 1; i <= len; ++i) labels.push_back(vlabel(i));
  labels.insert(labels.end(), {"u0", "u1", "u2"});
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < len; ++i) edges.emplace_back(v(i), v(i + 1));
  for (int i = 1; i <= 2 * n - 1; i += 2) edges.emplace_back(v(i), v(i + 2));
  edges.emplace_back(u1, u0);
  edges.emplace_back(u0, u2);
  for (int i = 2; i <= n; i += 2) edges.emplace_back(u1, v(2 * i));
  for (int i = 1; i <= n - 1; i += 2) edges.emplace_back(u2, v(2 * i));
  edges.emplace_back(u1, v(1));
  edges.emplace_back(u2, v(len));
  return build_graph(len + 3, edges, std::move(labels));
}

SpliceResult edge_splice(const MultiGraph& g1, const MultiGraph& g2, VertexId x, VertexId y) {
  if (x == y) throw Error(ErrorCode::kBadSplice, "splice needs two distinct vertices");
  const auto x1 = g1.position(x), y1 = g1.position(y);
  const auto x2 = g2.position(x), y2 = g2.position(y);
  if (!x1 || !y1 || !x2 || !y2) {
    throw Error(ErrorCode::kBadSplice, "x and y must be vertices of both graphs");
  }
  const int mult = g1.multiplicity(*x1, *y1);
  if (mult == 0 || g2.multiplicity(*x2, *y2) == 0) {
    throw Error(ErrorCode::kBadSplice, "xy must be an edge of both graphs");
  }
  if (mult != g2.multiplicity(*x2, *y2)) {
    throw Error(ErrorCode::kBadSplice, "xy has different multiplicities in the two graphs");
  }

  SpliceResult out;
  std::vector<VertexInfo> vertices;
  std::set<std::string> labels;
  for (int p = 0; p < g1.order(); ++p) {
    vertices.push_back(g1.info(p));
    labels.insert(g1.label(p));
  }
  VertexId next = g1.next_id();
  for (int p = 0; p < g2.order(); ++p) {
    const VertexId id = g2.id(p);
    if (id == x || id == y) {
      out.second_ids[id] = id;
      continue;
    }
    VertexInfo info;
    info.id = next++;
    info.label = g2.label(p);
    while (labels.count(info.label) != 0) info.label += "'";
    labels.insert(info.label);
    out.second_ids[id] = info.id;
    vertices.push_back(std::move(info));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g1.edges()) edges.emplace_back(g1.id(e.a), g1.id(e.b));
  const VertexSet xy{*x2, *y2};
  for (const Edge& e : g2.edges()) {
    if (e.ends() == xy) continue;
    edges.emplace_back(out.second_ids.at(g2.id(e.a)), out.second_ids.at(g2.id(e.b)));
  }
  out.graph = MultiGraph(std::move(vertices), edges, next);
  return out;
}

MultiGraph k4_splice_chain(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParameter, "chain needs n >= 1");
  const std::vector<std::pair<int, int>> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  MultiGraph g = build_graph(4, k4, {"u1", "u2", "v1", "u3"});
  auto glue = [&](const std::string& a, const std::string& b, const std::string& c,
                  const std::string& d) {
    const VertexId ia = g.id(*g.position_of_label(a));
    const VertexId ib = g.id(*g.position_of_label(b));
    const VertexId fresh = g.next_id();
    std::vector<VertexInfo> vs = {{ia, a, {}, {}}, {ib, b, {}, {}},
                                  {fresh, c, {}, {}}, {fresh + 1, d, {}, {}}};
    const std::vector<std::pair<VertexId, VertexId>> es = {
        {ia, ib}, {ia, fresh}, {ia, fresh + 1}, {ib, fresh}, {ib, fresh + 1}, {fresh, fresh + 1}};
    g = edge_splice(g, MultiGraph(std::move(vs), es), ia, ib).graph;
  };
  for (int i = 1; i <= 2 * n - 1; i += 2) {
    glue(vlabel(i), ulabel(i + 2), vlabel(i + 1), vlabel(i + 2));
    if (i + 2 <= 2 * n - 1) glue(vlabel(i + 2), ulabel(i + 2), ulabel(i + 3), ulabel(i + 4));
  }
  return g;
}

MultiGraph gen_named(std::string_view name) {
  std::vector<std::pair<int, int>> edges;
  if (name == "k4") {
    edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return build_graph(4, edges);
  }
  if (name == "k3,3" || name == "k33") {
    for (int a = 0; a < 3; ++a) {
      for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
    }
    return build_graph(6, edges);
  }
  if (name == "c4") {
    edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return build_graph(4, edges);
  }
  if (name == "c6") {
    for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    return build_graph(6, edges, {"v1", "v2", "v3", "v4", "v5", "v6"});
  }
  if (name == "prism") {
    edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
    return build_graph(6, edges);
  }
  if (name == "petersen") {
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build_graph(10, edges);
  }
  throw Error(ErrorCode::kUnknownGraph, "no built-in graph named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const MultiGraph& g) {
  Matrix m(g.order(), std::vector<int>(g.order(), 0));
  for (const Edge& e : g.edges()) {
    ++m[e.a][e.b];
    ++m[e.b][e.a];
  }
  return m;
}

// Colours are ranks 0..k-1; refines until stable. Deterministic in the
// colours alone, never in vertex numbering.
void refine(const Matrix& m, std::vector<int>& colour) {
  const int n = static_cast<int>(colour.size());
  std::vector<int> initial = colour;
  std::sort(initial.begin(), initial.end());
  int classes = static_cast<int>(std::unique(initial.begin(), initial.end()) - initial.begin());
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (int w = 0; w < n; ++w) {
        if (m[v][w] != 0) around.push_back(colour[w] * 256 + m[v][w]);
      }
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

void search(const Matrix& m, std::vector<int> colour, std::string& best, bool& have) {
  refine(m, colour);
  const int n = static_cast<int>(colour.size());
  std::vector<int> count(n, 0);
  for (int c : colour) ++count[c];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
  }
  if (target < 0) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[colour[v]] = v;
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s.push_back(static_cast<char>('0' + m[order[i]][order[j]]));
    }
    if (!have || s < best) {
      best = std::move(s);
      have = true;
    }
    return;
  }
  // Swapping two twins (equal rows off the pair) is an automorphism that
  // keeps the colouring, so one branch per twin class suffices.
  std::vector<int> tried;
  for (int v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    const bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
      for (int x = 0; x < n; ++x) {
        if (x != v && x != w && m[v][x] != m[w][x]) return false;
      }
      return true;
    });
    if (twin) continue;
    tried.push_back(v);
    // v keeps the cell's rank; its cellmates move just above it.
    std::vector<int> next(n);
    for (int w = 0; w < n; ++w) next[w] = 2 * colour[w] + (colour[w] == target && w != v ? 1 : 0);
    search(m, next, best, have);
  }
}

}  // namespace

std::string canonical_form(const MultiGraph& g) {
  const int n = g.order();
  std::string out = std::to_string(n) + ":";
  if (n == 0) return out;
  const Matrix m = multiplicities(g);
  std::string best;
  bool have = false;
  search(m, std::vector<int>(n, 0), best, have);
  return out + best;
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Built-in enumeration

namespace {

MultiGraph from_canonical(const std::string& form) {
  const auto colon = form.find(':');
  const int n = std::stoi(form.substr(0, colon));
  std::vector<std::pair<int, int>> edges;
  std::size_t k = colon + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      for (int r = 0; r < form[k] - '0'; ++r) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

struct ConnectedCache {
  std::mutex mu;
  std::vector<std::vector<std::string>> forms;  // forms[n], sorted
};

ConnectedCache& cache() {
  static ConnectedCache c;
  return c;
}

}  // namespace

std::vector<MultiGraph> connected_graphs(int n) {
  if (n < 1 || n > kBuiltinCorpusLimit) {
    throw Error(ErrorCode::kNeedExternalCorpus,
                "built-in enumeration covers 1.." + std::to_string(kBuiltinCorpusLimit) +
                    " vertices; supply a graph6 file for " + std::to_string(n));
  }
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  if (c.forms.size() < 2) c.forms = {{}, {"1:"}};
  // Every connected graph has a vertex whose removal leaves it connected, so
  // adding a vertex with a nonempty neighbourhood to each class n-1 graph
  // reaches all of class n.
  while (static_cast<int>(c.forms.size()) <= n) {
    const int k = static_cast<int>(c.forms.size());
    std::unordered_set<std::string> seen;
    for (const auto& form : c.forms[k - 1]) {
      const MultiGraph base = from_canonical(form);
      std::vector<std::pair<int, int>> edges;
      for (const Edge& e : base.edges()) edges.emplace_back(e.a, e.b);
      const std::size_t base_size = edges.size();
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
        edges.resize(base_size);
        for (int v = 0; v < k - 1; ++v) {
          if ((mask >> v) & 1U) edges.emplace_back(v, k - 1);
        }
        seen.insert(canonical_form(build_graph(k, edges)));
      }
    }
    std::vector<std::string> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    c.forms.push_back(std::move(sorted));
  }
  std::vector<MultiGraph> out;
  out.reserve(c.forms[n].size());
  for (const auto& form : c.forms[n]) out.push_back(from_canonical(form));
  return out;
}

std::size_t CorpusManifest::emitted() const {
  std::size_t total = 0;
  for (const auto& [n, stats] : classes) total += stats.emitted;
  return total;
}

CorpusStream CorpusStream::builtin(int max_vertices, bool matching_covered_only) {
  if (max_vertices > kBuiltinCorpusLimit) {
    throw Error(ErrorCode::kNeedExternalCorpus,
                "built-in enumeration stops at " + std::to_string(kBuiltinCorpusLimit) +
                    " vertices; pass a graph6 corpus for larger graphs");
  }
  CorpusStream s;
  s.manifest_.source = "builtin";
  s.manifest_.max_vertices = max_vertices;
  s.manifest_.matching_covered_only = matching_covered_only;
  s.class_n_ = 0;
  return s;
}

CorpusStream CorpusStream::graph6_file(const std::string& path, int max_vertices,
                                       bool matching_covered_only) {
  auto in = std::make_shared<std::ifstream>(path);
  if (!*in) throw Error(ErrorCode::kParseError, "cannot open corpus file " + path);
  CorpusStream s;
  s.manifest_.source = path;
  s.manifest_.max_vertices = max_vertices;
  s.manifest_.matching_covered_only = matching_covered_only;
  s.input_ = std::move(in);
  return s;
}

std::optional<CorpusEntry> CorpusStream::next() {
  const bool filter = manifest_.matching_covered_only;
  if (input_) {
    std::string line;
    while (std::getline(*input_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      MultiGraph g;
      try {
        g = parse_graph6(line);
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError,
                    manifest_.source + ":" + std::to_string(line_) + ": " + e.what());
      }
      if (g.order() > manifest_.max_vertices) {
        ++manifest_.skipped;
        continue;
      }
      auto& stats = manifest_.classes[g.order()];
      ++stats.scanned;
      if (filter && !is_matching_covered(g)) continue;
      ++stats.emitted;
      return CorpusEntry{std::move(g), manifest_.source + ":" + std::to_string(line_)};
    }
    return std::nullopt;
  }
  while (true) {
    if (class_index_ < class_graphs_.size()) {
      MultiGraph g = std::move(class_graphs_[class_index_]);
      const std::size_t index = class_index_++;
      auto& stats = manifest_.classes[class_n_];
      ++stats.scanned;
      if (filter && !is_matching_covered(g)) continue;
      ++stats.emitted;
      return CorpusEntry{std::move(g), "n" + std::to_string(class_n_) + "#" + std::to_string(index)};
    }
    ++class_n_;
    // Odd orders have no perfect matching, so they are skipped under the filter.
    if (filter && class_n_ % 2 == 1) ++class_n_;
    if (class_n_ > manifest_.max_vertices) return std::nullopt;
    class_graphs_ = connected_graphs(class_n_);
    class_index_ = 0;
  }
}

std::vector<CorpusEntry> CorpusStream::drain() {
  std::vector<CorpusEntry> out;
  while (auto e = next()) out.push_back(std::move(*e));
  return out;
}

CorpusStream enumerate_matching_covered(int max_vertices) {
  if (max_vertices < 4 || max_vertices % 2 != 0) {
    throw Error(ErrorCode::kBadParameter, "max_vertices must be even and at least 4");
  }
  return CorpusStream::builtin(max_vertices, true);
}

MultiGraph random_matching_covered(int n, double p, std::mt19937_64& rng, int attempts) {
  if (n < 2 || n % 2 != 0 || n > MultiGraph::kMaxVertices || p <= 0.0 || p > 1.0) {
    throw Error(ErrorCode::kBadParameter, "need even n >= 2 and 0 < p <= 1");
  }
  constexpr std::uint64_t kScale = std::uint64_t{1} << 32;
  const auto threshold = static_cast<std::uint64_t>(p * static_cast<double>(kScale));
  for (int t = 0; t < attempts; ++t) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (draw_below(rng, kScale) < threshold) edges.emplace_back(a, b);
      }
    }
    MultiGraph g = build_graph(n, edges);
    if (is_matching_covered(g)) return g;
  }
  throw Error(ErrorCode::kSearchBudgetExceeded, "no matching covered draw in " +
                                                    std::to_string(attempts) + " attempts");
}

}  // namespace tightcut
