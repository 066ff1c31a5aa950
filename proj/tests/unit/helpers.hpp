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

#ifndef TIGHTCUT_TESTS_HELPERS_HPP_
#define TIGHTCUT_TESTS_HELPERS_HPP_

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "../support/brute.hpp"
#include "tightcut/corpus.hpp"
#include "tightcut/error.hpp"
#include "tightcut/graph.hpp"

namespace testing {

using namespace tightcut;

inline VertexSet by_labels(const MultiGraph& g, std::initializer_list<const char*> labels) {
  std::vector<std::string> v(labels.begin(), labels.end());
  return g.set_of_labels(v);
}

inline MultiGraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> e(edges);
  return build_graph(n, e);
}

inline brute::Mask mask(VertexSet s) { return s.bits(); }

// Matching covered corpus graphs up to `n` vertices, built once per order.
inline const std::vector<CorpusEntry>& mc_corpus(int n) {
  static std::vector<std::vector<CorpusEntry>> cache(9);
  if (cache[n].empty()) cache[n] = CorpusStream::builtin(n).drain();
  return cache[n];
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no tightcut::Error thrown");
  return ErrorCode::kInvariantViolation;
}

}  // namespace testing

#endif  // TIGHTCUT_TESTS_HELPERS_HPP_
