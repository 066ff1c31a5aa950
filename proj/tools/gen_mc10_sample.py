#!/usr/bin/env python3
# Copyright 2026 The tightcut Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes a seeded sample of pairwise non-isomorphic matching covered graphs.

Graphs are drawn from G(n, p) with p itself drawn per graph, kept when
connected and matching covered, and deduplicated up to isomorphism.
Independent of the C++ library: matching coverage is checked with networkx.
"""

import argparse
import random
import sys

import networkx as nx


def has_perfect_matching(g):
    m = nx.max_weight_matching(g, maxcardinality=True)
    return 2 * len(m) == g.number_of_nodes()


def matching_covered(g):
    if g.number_of_nodes() < 2 or not nx.is_connected(g):
        return False
    if not has_perfect_matching(g):
        return False
    for u, v in g.edges():
        h = g.copy()
        h.remove_nodes_from([u, v])
        if not has_perfect_matching(h):
            return False
    return True


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=20260101)
    ap.add_argument("--p-min", type=float, default=0.22)
    ap.add_argument("--p-max", type=float, default=0.55)
    ap.add_argument("--output", default="-")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    buckets = {}
    kept = []
    draws = 0
    while len(kept) < args.count:
        draws += 1
        p = rng.uniform(args.p_min, args.p_max)
        g = nx.gnp_random_graph(args.n, p, seed=rng.randrange(2**32))
        if not matching_covered(g):
            continue
        key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
        same = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in same):
            continue
        same.append(g)
        kept.append(g)

    out = sys.stdout if args.output == "-" else open(args.output, "w")
    with out:
        for g in kept:
            out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
    print(f"{len(kept)} graphs from {draws} draws", file=sys.stderr)


if __name__ == "__main__":
    main()
