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

#include "tightcut/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "tightcut/decomp.hpp"
#include "tightcut/error.hpp"
#include "tightcut/io.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/serialize.hpp"

namespace tightcut {

void ClaimTally::merge(const ClaimTally& o, std::size_t keep) {
  checked += o.checked;
  failed += o.failed;
  for (const auto& f : o.failures) {
    if (failures.size() >= keep) break;
    failures.push_back(f);
  }
}

bool SweepReport::clean() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const auto& kv) { return kv.second.failed == 0; });
}

namespace {

const std::vector<std::string> kTheoremClaims = {"1.1", "1.2", "1.3", "3.3", "3.3*"};
const std::vector<std::string> kPropertyClaims = {"2.1",   "2.2", "2.3", "2.4",       "2.5", "2.6",
                                                  "2conn", "3.1", "3.2", "elp-tight", "cert"};

}  // namespace

const std::vector<std::string>& known_claims() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v = kTheoremClaims;
    v.insert(v.end(), kPropertyClaims.begin(), kPropertyClaims.end());
    return v;
  }();
  return all;
}

std::set<std::string> parse_claims(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream in(csv);
  std::string key;
  while (std::getline(in, key, ',')) {
    key.erase(0, key.find_first_not_of(' '));
    key.erase(key.find_last_not_of(' ') + 1);
    if (key.empty()) continue;
    if (key == "props") {
      out.insert(kPropertyClaims.begin(), kPropertyClaims.end());
    } else if (key == "all") {
      out.insert(known_claims().begin(), known_claims().end());
    } else if (std::find(known_claims().begin(), known_claims().end(), key) !=
               known_claims().end()) {
      out.insert(key);
    } else {
      throw Error(ErrorCode::kBadParameter, "unknown claim '" + key + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kBadParameter, "no claims selected");
  return out;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        cursor.store(count);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

namespace {

struct GraphResult {
  std::map<std::string, ClaimTally> claims;
  std::map<std::string, std::size_t> counters;
  std::size_t tight_cuts = 0;
};

class Recorder {
 public:
  Recorder(const CorpusEntry& entry, GraphResult& out, std::size_t keep)
      : entry_(entry), out_(out), keep_(keep) {}

  void record(const std::string& claim, bool ok, VertexSet shore = {},
              const std::string& note = {}) {
    ClaimTally& t = out_.claims[claim];
    ++t.checked;
    if (ok) return;
    ++t.failed;
    if (t.failures.size() >= keep_) return;
    const MultiGraph& g = entry_.graph;
    t.failures.push_back({entry_.name, format_graph_json(g), g.labels_of(shore), note});
  }

  void count(const std::string& key, std::size_t by = 1) { out_.counters[key] += by; }

 private:
  const CorpusEntry& entry_;
  GraphResult& out_;
  std::size_t keep_;
};

Json round_trip(const Json& j) { return Json::parse(j.dump()); }

bool same_barrier(const MultiGraph& g, const Barrier& a) {
  const auto fresh = make_barrier(g, a.vertices);
  return fresh && fresh->components == a.components;
}

// Maps a shore of a contraction back to G: the contracted vertex (last
// position) stands for `collapsed`.
VertexSet lift_shore(const MultiGraph& g, const MultiGraph& h, VertexSet s, VertexSet collapsed) {
  const int star = h.order() - 1;
  VertexSet out;
  for (int p : s) {
    if (p == star) {
      out |= collapsed;
    } else {
      out.insert(*g.position(h.id(p)));
    }
  }
  return out;
}

VertexSet project_shore(const MultiGraph& g, const MultiGraph& h, VertexSet s,
                        VertexSet collapsed) {
  VertexSet out;
  for (int p : s - collapsed) out.insert(*h.position(g.id(p)));
  if (s.intersects(collapsed)) out.insert(h.order() - 1);
  return out;
}

void check_barrier_shape(const CutAnalyzer& a, Recorder& rec) {
  const MultiGraph& g = a.graph();
  const int n = g.order();
  if (n > 20) return;
  std::unordered_set<VertexSet, VertexSetHash> brute;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const VertexSet b(bits);
    if (b.size() < 2) continue;
    if (odd_component_count(g, g.all() - b) != b.size()) continue;
    brute.insert(b);
    bool independent = true;
    for (int v : b) independent = independent && !g.neighbors(v).intersects(b);
    rec.record("2.2", independent && removed_components(g, b).even_count == 0, b,
               "non-trivial barrier with an inner edge or an even component");
  }
  std::unordered_set<VertexSet, VertexSetHash> found;
  for (const auto& b : a.barriers()) found.insert(b.vertices);
  rec.record("2.2", found == brute, {}, "pruned barrier search disagrees with brute force");
}

void check_contractions(const CutAnalyzer& a, const std::vector<Cut>& cuts, const Cut& c,
                        Recorder& rec) {
  const MultiGraph& g = a.graph();
  for (VertexSet side : {c.shore(), c.other_shore()}) {
    const MultiGraph h = contract(g, side, "*");
    const bool mc = is_matching_covered(h);
    rec.record("2.4", mc, c.shore(), "contraction is not matching covered");
    if (!mc) continue;
    for (const Cut& d : enumerate_tight_cuts(h, true)) {
      const VertexSet lifted = lift_shore(g, h, d.shore(), side);
      rec.record("2.4", a.tightness(lifted).tight, lifted,
                 "tight cut of a contraction is not tight in G");
    }
    for (const Cut& d : cuts) {
      for (VertexSet z : {d.shore(), d.other_shore()}) {
        // z survives in h as an edge cut when it avoids or swallows `side`.
        if (z.intersects(side) && !side.subset_of(z)) continue;
        const VertexSet zh = project_shore(g, h, z, side);
        if (zh.empty() || zh == h.all()) continue;
        rec.record("2.4", is_tight(h, zh).tight, z,
                   "tight cut of G surviving in a contraction is not tight there");
        break;
      }
    }
  }
}

void check_uncrossing(const CutAnalyzer& a, const std::vector<Cut>& cuts, Recorder& rec) {
  const MultiGraph& g = a.graph();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      const VertexSet x = cuts[i].shore();
      for (VertexSet y : {cuts[j].shore(), cuts[j].other_shore()}) {
        if (!(x & y).odd()) continue;
        const VertexSet meet = x & y;
        const VertexSet join = x | y;
        bool ok = a.tightness(meet).tight;
        if (join != g.all()) ok = ok && a.tightness(join).tight;
        ok = ok && edges_between(g, x - y, y - x).empty();
        rec.record("2.3", ok, meet, "uncrossing fails for " + g.format(x) + " and " + g.format(y));
      }
    }
  }
}

void check_lifting(const CutAnalyzer& a, Recorder& rec) {
  const MultiGraph& g = a.graph();
  for (const auto& sep : a.separations()) {
    for (const ElpCut& e : two_separation_cuts(g, sep)) {
      if (e.cut.trivial()) continue;
      const VertexSet x = e.shore();
      const int u2 = (sep.pair - VertexSet::single(e.apex)).lowest();
      const MultiGraph h = contract(g, g.all() - x, "xbar");
      const VertexId xbar = h.id(h.order() - 1);
      const StructureIndex hi = index_structure(h);
      std::vector<std::pair<VertexSet, SeparatorKind>> found;
      for (const auto& b : hi.barriers) found.emplace_back(b.vertices, SeparatorKind::kBarrier);
      for (const auto& s : hi.separations) found.emplace_back(s.pair, SeparatorKind::kTwoSeparation);
      for (const auto& [s_h, kind] : found) {
        const LiftedSet lifted = lift_from_contraction(g, h, xbar, g.id(u2), s_h);
        const bool ok = lifted.kind == kind && (kind == SeparatorKind::kBarrier
                                                    ? is_barrier(g, lifted.vertices)
                                                    : is_two_separation(g, lifted.vertices));
        rec.record("2.6", ok, x, "lift of " + h.format(s_h) + " fails");
      }
    }
  }
}

void check_shores(const CutAnalyzer& a, Recorder& rec) {
  const MultiGraph& g = a.graph();
  for (VertexSet x : odd_shores(g, 3)) {
    if (!a.tightness(x).tight) continue;
    rec.record("2.5", is_connected(g, x) && is_connected(g, g.all() - x), x,
               "tight cut with a disconnected shore");
  }
}

void check_accepted_shores(const CutAnalyzer& a, Recorder& rec) {
  const MultiGraph& g = a.graph();
  for (VertexSet x : odd_shores(g, 3)) {
    const GsOutcome gs = a.gs(x);
    if (gs.certificate) {
      rec.record("3.2", a.tightness(x).tight && validate_gs_certificate(g, x, *gs.certificate), x,
                 "accepted GS shore is not tight or its certificate fails");
    }
    try {
      const EssentialOutcome ess = a.essential(x);
      if (ess.certificate) {
        rec.record("3.2",
                   a.tightness(x).tight && validate_essential_certificate(g, x, *ess.certificate),
                   x, "accepted essential GS shore is not tight or its certificate fails");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchBudgetExceeded) throw;
      rec.count("essential-budget-exceeded");
    }
  }
}

void check_elp_cuts(const CutAnalyzer& a, Recorder& rec) {
  const MultiGraph& g = a.graph();
  std::vector<ElpCut> all = barrier_cuts(g, a.index());
  for (const auto& s : a.separations()) {
    for (auto& e : two_separation_cuts(g, s)) all.push_back(std::move(e));
  }
  for (const ElpCut& e : all) {
    rec.record("elp-tight", validate_elp_cut(g, e) && a.tightness(e.shore()).tight, e.shore(),
               "ELP-cut fails validation or tightness");
  }
}

void check_structure_round_trip(const CutAnalyzer& a, Recorder& rec) {
  const MultiGraph& g = a.graph();
  for (const Barrier& b : a.barriers()) {
    const Barrier back = barrier_from_json(g, round_trip(barrier_to_json(g, b)));
    rec.record("cert", back.vertices == b.vertices && same_barrier(g, back), b.vertices,
               "barrier round trip");
  }
  for (const TwoSeparation& s : a.separations()) {
    const TwoSeparation back = separation_from_json(g, round_trip(separation_to_json(g, s)));
    rec.record("cert", back.pair == s.pair && is_two_separation(g, back.pair), s.pair,
               "2-separation round trip");
    for (const ElpCut& e : two_separation_cuts(g, s)) {
      const ElpCut eb = elp_cut_from_json(g, round_trip(elp_cut_to_json(g, e)));
      rec.record("cert", eb.cut == e.cut && validate_elp_cut(g, eb), e.shore(),
                 "2-separation cut round trip");
    }
  }
  for (const ElpCut& e : barrier_cuts(g, a.index())) {
    const ElpCut eb = elp_cut_from_json(g, round_trip(elp_cut_to_json(g, e)));
    rec.record("cert", eb.cut == e.cut && validate_elp_cut(g, eb), e.shore(),
               "barrier-cut round trip");
  }
}

void check_classification_round_trip(const MultiGraph& g, VertexSet x,
                                     const TightCutClassification& cls, Recorder& rec) {
  if (cls.barrier) {
    const BarrierCutWitness w =
        barrier_witness_from_json(g, round_trip(barrier_witness_to_json(g, *cls.barrier)));
    const auto fresh = make_barrier(g, w.barrier.vertices);
    bool ok = fresh && w.barrier.vertices.size() >= 2 &&
              (w.component == x || w.component == g.all() - x);
    if (ok) {
      const auto odd = fresh->odd_components();
      ok = std::find(odd.begin(), odd.end(), w.component) != odd.end();
    }
    rec.record("cert", ok, x, "barrier-cut witness round trip");
  }
  if (cls.essential) {
    const EssentialGSCertificate back = essential_certificate_from_json(
        g, round_trip(essential_certificate_to_json(g, *cls.essential)));
    rec.record("cert", validate_essential_certificate(g, x, back), x,
               "essential GS certificate round trip");
  }
}

GraphResult analyze_graph(const CorpusEntry& entry, const SweepOptions& options) {
  GraphResult out;
  Recorder rec(entry, out, options.keep_failures);
  const auto want = [&](const char* key) { return options.claims.count(key) > 0; };
  CutAnalyzer a(entry.graph, options.essential);
  const MultiGraph& g = a.graph();
  if (!a.matching_covered()) {
    rec.count("skipped-not-matching-covered");
    return out;
  }

  if (want("2.1") && g.order() <= kTutteOracleLimit) {
    rec.record("2.1", tutte_condition_holds(g) == has_perfect_matching(g), {},
               "Tutte condition disagrees with matching search");
    const MatchingEnumeration all = enumerate_perfect_matchings(g, 1u << 20);
    if (!all.truncated) {
      std::vector<bool> used(g.size(), false);
      for (const auto& m : all.matchings) {
        for (int e : m.edges) used[e] = true;
      }
      const bool covered = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
      rec.record("2.1", covered, {}, "matching covered flag disagrees with enumeration");
    }
  }
  if (want("2conn") && g.order() >= 4) {
    bool ok = true;
    for (int v = 0; v < g.order(); ++v) ok = ok && is_connected(g, g.all() - VertexSet::single(v));
    rec.record("2conn", ok, {}, "cut vertex in a matching covered graph");
  }
  if (want("2.2")) check_barrier_shape(a, rec);
  if (want("2.5")) check_shores(a, rec);
  if (want("2.6")) check_lifting(a, rec);
  if (want("3.2")) check_accepted_shores(a, rec);
  if (want("elp-tight")) check_elp_cuts(a, rec);
  if (want("cert")) check_structure_round_trip(a, rec);

  const std::vector<Cut> cuts = a.nontrivial_tight_cuts();
  out.tight_cuts = cuts.size();
  if (want("1.1") && !cuts.empty()) {
    rec.record("1.1", !a.barriers().empty() || !a.separations().empty(), cuts.front().shore(),
               "non-trivial tight cut without a non-trivial barrier or 2-separation");
  }
  if (want("2.3")) check_uncrossing(a, cuts, rec);

  const bool need_elp = want("1.2") || want("3.3") || want("3.3*");
  for (const Cut& c : cuts) {
    const VertexSet x = c.shore();
    if (want("2.4")) check_contractions(a, cuts, c, rec);
    std::vector<ElpCut> elp;
    if (need_elp) elp = a.elp(c);
    if (want("1.2")) rec.record("1.2", !elp.empty(), x, "ELP set is empty");
    if (want("1.3") || want("cert")) {
      TightCutClassification cls;
      try {
        cls = a.classify_unchecked(x);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSearchBudgetExceeded) throw;
        rec.count("essential-budget-exceeded");
      }
      if (want("1.3")) {
        rec.record("1.3", cls.verdict != Verdict::kUnclassified, x, "unclassified tight cut");
        if (cls.verdict == Verdict::kEssentialGSCut && cls.essential &&
            cls.essential->barriers.empty()) {
          rec.count("essential-gs-cut (plain GS)");
        }
        rec.count(std::string(verdict_name(cls.verdict)));
      }
      if (want("cert")) check_classification_round_trip(g, x, cls, rec);
    }
    if (want("3.3") || want("3.3*") || want("cert")) {
      const GsOutcome gs = a.gs(x);
      if (!gs.certificate) continue;
      rec.count("gs-cut");
      if (want("cert")) {
        const GSCertificate back = gs_certificate_from_json(
            g, round_trip(gs_certificate_to_json(g, *gs.certificate)));
        rec.record("cert", validate_gs_certificate(g, x, back), x, "GS certificate round trip");
      }
      const bool self =
          std::any_of(elp.begin(), elp.end(), [&](const ElpCut& e) { return e.cut == c; });
      if (self) rec.count("gs-cut in its own ELP set");
      if (want("3.3")) {
        rec.record("3.3", elp.size() >= 2, x,
                   "GS-cut with |ELP| = " + std::to_string(elp.size()) +
                       (self ? " (the cut itself is an ELP-cut)" : ""));
      }
      if (want("3.3*") && !self) {
        rec.record("3.3*", elp.size() >= 2, x,
                   "GS-cut outside its ELP set with |ELP| = " + std::to_string(elp.size()));
      }
    }
  }
  return out;
}

}  // namespace

SweepReport run_sweep(const std::vector<CorpusEntry>& corpus, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<GraphResult> results(corpus.size());
  parallel_for(corpus.size(), options.jobs,
               [&](std::size_t i) { results[i] = analyze_graph(corpus[i], options); });
  SweepReport report;
  report.graphs = corpus.size();
  for (const auto& key : options.claims) {
    if (key != "3.1") report.claims[key];
  }
  for (const auto& r : results) {
    report.tight_cuts += r.tight_cuts;
    for (const auto& [k, v] : r.counters) report.counters[k] += v;
    for (const auto& [k, t] : r.claims) report.claims[k].merge(t, options.keep_failures);
  }
  if (options.claims.count("3.1")) {
    std::vector<CorpusEntry> bicritical;
    for (const auto& e : corpus) {
      if (e.graph.order() >= 4 && is_bicritical(e.graph)) bicritical.push_back(e);
    }
    ClaimTally& t = report.claims["3.1"];
    if (!bicritical.empty()) {
      const SpliceTrial trial = run_splice_trials(bicritical, 200, 1);
      t.checked = trial.trials;
      t.failed = trial.equivalence_failures + trial.bicritical_failures;
      for (const auto& f : trial.failures) {
        if (t.failures.size() >= options.keep_failures) break;
        t.failures.push_back({"splice", {}, {}, f});
      }
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

OracleAgreement compare_tightness_exhaustive(const std::vector<CorpusEntry>& corpus, int jobs) {
  std::vector<OracleAgreement> parts(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    const MultiGraph& g = corpus[i].graph;
    PerfectMatchingOracle oracle(g);
    for (VertexSet x : odd_shores(g, 1)) {
      ++parts[i].compared;
      if (tightness_pairwise(oracle, x).tight != tightness_by_enumeration(g, x).tight) {
        ++parts[i].disagreements;
      }
    }
  });
  OracleAgreement total;
  for (const auto& p : parts) {
    total.compared += p.compared;
    total.disagreements += p.disagreements;
  }
  return total;
}

OracleAgreement compare_tightness_sampled(const std::vector<CorpusEntry>& corpus,
                                          std::size_t samples, std::uint64_t seed) {
  OracleAgreement total;
  if (corpus.empty()) return total;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const MultiGraph& g = corpus[draw_below(rng, corpus.size())].graph;
    const std::uint64_t span = std::uint64_t{1} << g.order();
    VertexSet x;
    do {
      x = VertexSet(draw_below(rng, span));
    } while (!x.odd() || x == g.all());
    ++total.compared;
    PerfectMatchingOracle oracle(g);
    if (tightness_pairwise(oracle, x).tight != tightness_by_enumeration(g, x).tight) {
      ++total.disagreements;
    }
  }
  return total;
}

BrickInvariance check_brick_invariance(const std::vector<CorpusEntry>& corpus, int seeds,
                                       int jobs) {
  std::vector<BrickInvariance> parts(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    BrickInvariance& p = parts[i];
    const MultiGraph& g = corpus[i].graph;
    std::set<int> counts;
    for (Strategy s : {Strategy::kExhaustive, Strategy::kElpFirst}) {
      for (int seed = 0; seed < seeds; ++seed) {
        const DecompositionTree tree = decompose(g, s, static_cast<std::uint64_t>(seed));
        ++p.runs;
        if (auto why = validate_tree(tree)) {
          ++p.invalid_trees;
          p.failures.push_back(corpus[i].name + " " + std::string(strategy_name(s)) + " seed " +
                               std::to_string(seed) + ": " + *why);
        }
        counts.insert(brick_number(tree));
      }
    }
    p.graphs = 1;
    if (counts.size() != 1) {
      ++p.disagreements;
      p.failures.push_back(corpus[i].name + ": brick numbers disagree across runs");
    }
  });
  BrickInvariance total;
  for (auto& p : parts) {
    total.graphs += p.graphs;
    total.runs += p.runs;
    total.disagreements += p.disagreements;
    total.invalid_trees += p.invalid_trees;
    for (auto& f : p.failures) total.failures.push_back(std::move(f));
  }
  return total;
}

namespace {

// Copy of g with x_old -> x, y_old -> y and every other vertex moved to ids
// starting at `base`.
MultiGraph rekey(const MultiGraph& g, VertexId x_old, VertexId x, VertexId y_old, VertexId y,
                 VertexId base) {
  std::map<VertexId, VertexId> to;
  std::vector<VertexInfo> vertices;
  for (int p = 0; p < g.order(); ++p) {
    VertexInfo info = g.info(p);
    info.id = info.id == x_old ? x : info.id == y_old ? y : base++;
    info.replaces.clear();
    info.origin.clear();
    to[g.id(p)] = info.id;
    vertices.push_back(std::move(info));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(to[g.id(e.a)], to[g.id(e.b)]);
  return MultiGraph(std::move(vertices), edges, base);
}

std::vector<VertexId> pick_shore(const MultiGraph& g, int x, int y, std::mt19937_64& rng) {
  std::vector<VertexSet> tight;
  for (VertexSet s : odd_shores(g, 1)) {
    for (VertexSet z : {s, g.all() - s}) {
      if (z.contains(x) && !z.contains(y) && is_tight(g, z).tight) tight.push_back(z);
    }
  }
  VertexSet chosen;
  if (!tight.empty() && draw_below(rng, 2) == 0) {
    chosen = tight[draw_below(rng, tight.size())];
  } else {
    const VertexSet pool = g.all() - VertexSet{x, y};
    do {
      chosen = VertexSet(draw_below(rng, std::uint64_t{1} << g.order())) & pool;
    } while (chosen.odd());
    chosen.insert(x);
  }
  return g.ids_of(chosen);
}

}  // namespace

SpliceTrial run_splice_trials(const std::vector<CorpusEntry>& bicritical, std::size_t trials,
                              std::uint64_t seed) {
  SpliceTrial out;
  if (bicritical.empty()) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const CorpusEntry& a = bicritical[draw_below(rng, bicritical.size())];
    const CorpusEntry& b = bicritical[draw_below(rng, bicritical.size())];
    const MultiGraph& g1 = a.graph;
    const Edge e1 = g1.edge(static_cast<int>(draw_below(rng, g1.size())));
    const Edge e2 = b.graph.edge(static_cast<int>(draw_below(rng, b.graph.size())));
    const bool flip = draw_below(rng, 2) == 1;
    const VertexId x = g1.id(e1.a);
    const VertexId y = g1.id(e1.b);
    const VertexId x2 = b.graph.id(flip ? e2.b : e2.a);
    const VertexId y2 = b.graph.id(flip ? e2.a : e2.b);
    const MultiGraph g2 = rekey(b.graph, x2, x, y2, y, 1000);
    const auto ids1 = pick_shore(g1, e1.a, e1.b, rng);
    const auto ids2 = pick_shore(g2, *g2.position(x), *g2.position(y), rng);
    ++out.trials;
    const std::string what = a.name + " (+) " + b.name + " at " + g1.label(e1.a) + g1.label(e1.b);
    try {
      const SpliceTightness r = check_splice_tightness(g1, g2, x, y, ids1, ids2);
      if (r.first && r.second) ++out.both_tight;
      if (r.spliced != (r.first && r.second)) {
        ++out.equivalence_failures;
        out.failures.push_back(what + ": tightness of the joined shore is not the conjunction");
      }
      if (!is_bicritical(edge_splice(g1, g2, x, y).graph)) {
        ++out.bicritical_failures;
        out.failures.push_back(what + ": splice is not bicritical");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBadSplice) throw;
      ++out.bicritical_failures;
      out.failures.push_back(what + ": " + e.what());
    }
  }
  return out;
}

}  // namespace tightcut
