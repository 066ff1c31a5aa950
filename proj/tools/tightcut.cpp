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

// tightcut: analyze, classify, decompose and verify from the command line.
//
// Exit codes: 0 success, 1 other error, 2 parse error, 3 bad cut,
// 4 invariance violation, 5 counterexample candidate.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "tightcut/corpus.hpp"
#include "tightcut/decomp.hpp"
#include "tightcut/elp.hpp"
#include "tightcut/error.hpp"
#include "tightcut/gscut.hpp"
#include "tightcut/io.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/serialize.hpp"
#include "tightcut/verify.hpp"

namespace tc = tightcut;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kBadCut = 3,
  kInvariance = 4,
  kCounterexample = 5,
};

struct InputOptions {
  std::string input;
  std::string format = "graph6";
  std::string builtin;
};

struct Options {
  InputOptions in;
  bool json = false;
  bool exhaustive = false;
  std::string shore;
  std::string strategy = "exhaustive";
  std::uint64_t seed = 0;
  int repeats = 1;
  std::optional<int> max_n;  // default: 8 built-in, no cap for files

  int cap() const {
    return max_n.value_or(in.input.empty() ? 8 : tc::MultiGraph::kMaxVertices);
  }
  std::string theorems = "1.1,1.2,1.3,3.3";
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string counterexamples;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw tc::Error(tc::ErrorCode::kParseError, "bad " + what + " '" + s + "'");
}

// "k4", "petersen", "h:3", "hprime:4", ...
tc::MultiGraph builtin_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  if (colon != std::string::npos) {
    const int n = parse_int(spec.substr(colon + 1), "family parameter");
    if (family == "h" || family == "h_n") return tc::gen_h_n(n);
    if (family == "hprime" || family == "h_n_prime") return tc::gen_h_n_prime(n);
    if (family == "chain") return tc::k4_splice_chain(n);
    throw tc::Error(tc::ErrorCode::kUnknownGraph, "unknown family '" + family + "'");
  }
  return tc::gen_named(spec);
}

std::vector<tc::MultiGraph> load_graphs(const InputOptions& in) {
  if (!in.builtin.empty()) {
    if (!in.input.empty()) {
      throw tc::Error(tc::ErrorCode::kParseError, "--builtin and --input are exclusive");
    }
    return {builtin_graph(in.builtin)};
  }
  if (in.input.empty()) throw tc::Error(tc::ErrorCode::kParseError, "no input given");
  const tc::GraphFormat format = tc::parse_format(in.format);
  if (in.input == "-") return tc::read_graphs(std::cin, format);
  std::ifstream file(in.input);
  if (!file) throw tc::Error(tc::ErrorCode::kParseError, "cannot open '" + in.input + "'");
  return tc::read_graphs(file, format);
}

tc::MultiGraph load_one(const InputOptions& in) {
  auto graphs = load_graphs(in);
  if (graphs.size() != 1) {
    throw tc::Error(tc::ErrorCode::kParseError,
                    "expected one graph, got " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

tc::Json report(const std::string& command, const tc::MultiGraph* g) {
  tc::Json j = {{"command", command}, {"version", kVersion}};
  if (g) {
    j["input_digest"] = hex(g->fingerprint());
    j["graph"] = tc::graph_to_json(*g);
  }
  return j;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& o, tc::Json& j, const Timer& t, const std::string& summary) {
  j["seconds"] = t.seconds();
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << summary;
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return "{" + out + "}";
}

int cmd_analyze(const Options& o) {
  Timer timer;
  const tc::MultiGraph g = load_one(o.in);
  tc::Json j = report("analyze", &g);
  std::ostringstream text;
  text << "graph: " << g.order() << " vertices, " << g.size() << " edges\n";
  const bool mc = tc::is_matching_covered(g);
  tc::Json f = {{"matching_covered", mc}, {"bipartite", tc::is_bipartite(g)}};
  text << "matching covered: " << (mc ? "yes" : "no") << "\n";
  if (!mc) {
    j["findings"] = f;
    emit(o, j, timer, text.str());
    return kOk;
  }
  const bool bicritical = tc::is_bicritical(g);
  f["bicritical"] = bicritical;
  text << "bicritical: " << (bicritical ? "yes" : "no") << "\n";
  const tc::StructureIndex index = tc::index_structure(g);
  f["barriers"] = tc::Json::array();
  for (const auto& b : index.barriers) {
    f["barriers"].push_back(tc::barrier_to_json(g, b));
    text << "barrier " << join(g.labels_of(b.vertices)) << (b.maximal ? " (maximal)" : "") << "\n";
  }
  f["two_separations"] = tc::Json::array();
  for (const auto& s : index.separations) {
    f["two_separations"].push_back(tc::separation_to_json(g, s));
    text << "2-separation " << join(g.labels_of(s.pair)) << "\n";
  }
  f["elp_cuts"] = tc::Json::array();
  std::vector<tc::ElpCut> elp = tc::barrier_cuts(g, index);
  for (const auto& s : index.separations) {
    for (auto& e : tc::two_separation_cuts(g, s)) {
      if (!e.cut.trivial()) elp.push_back(std::move(e));
    }
  }
  for (const auto& e : elp) {
    f["elp_cuts"].push_back(tc::elp_cut_to_json(g, e));
    text << (e.kind == tc::ElpKind::kBarrierCut ? "barrier-cut " : "2-separation cut ")
         << join(g.labels_of(e.shore())) << "\n";
  }
  text << index.barriers.size() << " non-trivial barriers, " << index.separations.size()
       << " 2-separations, " << elp.size() << " non-trivial ELP-cuts\n";
  if (o.exhaustive) {
    const auto cuts = tc::enumerate_tight_cuts(g, true);
    f["tight_cuts"] = tc::Json::array();
    for (const auto& c : cuts) {
      f["tight_cuts"].push_back(tc::labels_to_json(g, c.shore()));
      text << "tight cut " << join(g.labels_of(c.shore())) << "\n";
    }
    f["brick_or_brace"] = cuts.empty();
    text << cuts.size() << " non-trivial tight cuts"
         << (cuts.empty() ? (tc::is_bipartite(g) ? " (brace)" : " (brick)") : "") << "\n";
  }
  j["findings"] = f;
  emit(o, j, timer, text.str());
  return kOk;
}

int cmd_classify(const Options& o) {
  Timer timer;
  const tc::MultiGraph g = load_one(o.in);
  const std::vector<std::string> labels = split_csv(o.shore);
  const tc::VertexSet x = g.set_of_labels(labels);
  tc::Json j = report("classify", &g);
  const tc::Cut cut(g, x);
  if (cut.trivial()) throw tc::Error(tc::ErrorCode::kTrivialCut, "shore " + g.format(x) + " is trivial");
  if (!x.odd()) throw tc::Error(tc::ErrorCode::kEvenShore, "shore " + g.format(x) + " is even");
  if (!tc::is_matching_covered(g)) {
    throw tc::Error(tc::ErrorCode::kNotMatchingCovered, "graph is not matching covered");
  }
  const auto verdict = tc::is_tight(g, x);
  if (!verdict.tight) {
    tc::Json w = tc::Json::array();
    std::string text = "not tight; witness perfect matching:";
    for (int e : verdict.witness->edges) {
      const tc::Edge& edge = g.edge(e);
      w.push_back({g.label(edge.a), g.label(edge.b)});
      text += " " + g.label(edge.a) + g.label(edge.b);
    }
    j["findings"] = {{"tight", false}, {"witness", w}};
    j["error"] = "NotTight";
    emit(o, j, timer, text + "\n");
    return kBadCut;
  }
  const tc::TightCutClassification cls = tc::classify_tight_cut(g, x);
  j["findings"] = tc::classification_to_json(g, x, cls);
  std::ostringstream text;
  text << "cut " << join(labels) << ": " << tc::verdict_name(cls.verdict) << "\n";
  if (cls.barrier) text << "barrier " << join(g.labels_of(cls.barrier->barrier.vertices)) << "\n";
  if (cls.essential) {
    std::vector<std::string> bs;
    for (const auto& b : cls.essential->barriers) bs.push_back(join(g.labels_of(b.barrier.vertices)));
    text << "contracted barriers " << join(bs) << "\n";
  }
  emit(o, j, timer, text.str());
  return cls.verdict == tc::Verdict::kUnclassified ? kCounterexample : kOk;
}

int cmd_decompose(const Options& o) {
  Timer timer;
  const tc::MultiGraph g = load_one(o.in);
  const tc::Strategy strategy = tc::parse_strategy(o.strategy);
  tc::Json j = report("decompose", &g);
  tc::Json runs = tc::Json::array();
  std::set<int> counts;
  bool valid = true;
  std::ostringstream text;
  for (int r = 0; r < std::max(1, o.repeats); ++r) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(r);
    const tc::DecompositionTree tree = tc::decompose(g, strategy, seed);
    const auto problem = tc::validate_tree(tree);
    valid = valid && !problem;
    const int bricks = tc::brick_number(tree);
    counts.insert(bricks);
    tc::Json run = {{"seed", seed}, {"brick_number", bricks}, {"leaves", tc::leaf_count(tree)},
                    {"valid", !problem}};
    if (problem) run["problem"] = *problem;
    if (r == 0) run["tree"] = tc::tree_to_json(tree);
    runs.push_back(std::move(run));
    text << "seed " << seed << ": brick number " << bricks << ", " << tc::leaf_count(tree)
         << (tc::leaf_count(tree) == 1 ? " leaf" : " leaves") << (problem ? " INVALID: " + *problem : "") << "\n";
  }
  const bool agree = counts.size() == 1;
  j["findings"] = {{"strategy", std::string(tc::strategy_name(strategy))},
                   {"runs", runs},
                   {"agree", agree},
                   {"brick_number", agree ? tc::Json(*counts.begin()) : tc::Json(nullptr)}};
  if (!agree) text << "brick numbers disagree across seeds\n";
  emit(o, j, timer, text.str());
  return agree && valid ? kOk : kInvariance;
}

tc::Json counterexample_json(const std::string& claim, const tc::Counterexample& c) {
  return {{"claim", claim},
          {"graph_name", c.graph_name},
          {"graph", c.graph_json.empty() ? tc::Json(nullptr) : tc::Json::parse(c.graph_json)},
          {"shore", c.shore},
          {"note", c.note}};
}

int cmd_verify(const Options& o) {
  Timer timer;
  tc::SweepOptions sweep;
  sweep.claims = tc::parse_claims(o.theorems);
  sweep.jobs = o.jobs;
  std::vector<tc::CorpusEntry> corpus;
  tc::Json manifest;
  if (!o.in.input.empty()) {
    auto stream = tc::CorpusStream::graph6_file(o.in.input, o.cap());
    corpus = stream.drain();
    manifest = tc::manifest_to_json(stream.manifest());
  } else {
    auto stream = tc::CorpusStream::builtin(o.cap());
    corpus = stream.drain();
    manifest = tc::manifest_to_json(stream.manifest());
  }
  const tc::SweepReport r = tc::run_sweep(corpus, sweep);
  tc::Json j = report("verify", nullptr);
  tc::Json claims = tc::Json::object();
  std::ostringstream text;
  text << "corpus: " << r.graphs << " graphs, " << r.tight_cuts << " non-trivial tight cuts\n";
  if (manifest.value("skipped", 0) > 0) {
    text << "skipped " << manifest["skipped"].get<std::size_t>() << " input graphs over the vertex cap\n";
  }
  if (corpus.empty()) text << "warning: empty corpus, every claim passes vacuously\n";
  std::size_t dumped = 0;
  for (const auto& [key, t] : r.claims) {
    tc::Json fails = tc::Json::array();
    for (const auto& c : t.failures) {
      tc::Json cj = counterexample_json(key, c);
      if (!o.counterexamples.empty()) {
        std::filesystem::create_directories(o.counterexamples);
        std::string name = key;
        for (char& ch : name) {
          if (ch == '*') ch = 'x';
        }
        const auto path = std::filesystem::path(o.counterexamples) /
                          ("claim-" + name + "-" + std::to_string(dumped++) + ".json");
        std::ofstream(path) << cj.dump(2) << "\n";
      }
      fails.push_back(std::move(cj));
    }
    claims[key] = {{"checked", t.checked}, {"failed", t.failed}, {"failures", fails}};
    text << std::left << std::setw(10) << key << " " << (t.failed == 0 ? "pass" : "FAIL")
         << "  checked " << t.checked << ", failed " << t.failed << "\n";
  }
  j["findings"] = {{"corpus", manifest},
                   {"graphs", r.graphs},
                   {"tight_cuts", r.tight_cuts},
                   {"counters", r.counters},
                   {"claims", claims},
                   {"empty_corpus", corpus.empty()}};
  for (const auto& [k, v] : r.counters) text << "  " << k << ": " << v << "\n";
  emit(o, j, timer, text.str());
  return r.clean() ? kOk : kCounterexample;
}

int cmd_corpus(const Options& o, bool all) {
  auto stream = o.in.input.empty() ? tc::CorpusStream::builtin(o.cap(), !all)
                                   : tc::CorpusStream::graph6_file(o.in.input, o.cap(), !all);
  while (auto e = stream.next()) std::cout << tc::to_graph6(e->graph) << "\n";
  std::cerr << tc::manifest_to_json(stream.manifest()).dump() << "\n";
  return kOk;
}

int cmd_gen(const Options& o) {
  const tc::MultiGraph g = builtin_graph(o.in.builtin);
  if (o.in.format == "json" || o.json) {
    std::cout << tc::graph_to_json(g).dump(o.json ? 2 : -1) << "\n";
  } else {
    std::cout << tc::to_graph6(g) << "\n";
  }
  return kOk;
}

int exit_for(const tc::Error& e) {
  switch (e.code()) {
    case tc::ErrorCode::kParseError:
    case tc::ErrorCode::kUnknownGraph:
      return kParse;
    case tc::ErrorCode::kBadShore:
    case tc::ErrorCode::kBadVertex:
    case tc::ErrorCode::kEvenShore:
    case tc::ErrorCode::kTrivialCut:
    case tc::ErrorCode::kNotTight:
    case tc::ErrorCode::kNotMatchingCovered:
      return kBadCut;
    case tc::ErrorCode::kInvariantViolation:
      return kInvariance;
    default:
      return kOther;
  }
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.in.input, "graph file, or - for stdin");
  cmd->add_option("--format", o.in.format, "graph6 | json")->check(CLI::IsMember({"graph6", "g6", "json"}));
  cmd->add_option("--builtin", o.in.builtin,
                  "generated graph: k4, k3,3, c4, c6, prism, petersen, h:N, hprime:N, chain:N");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight cuts, ELP-cuts and GS-cuts of matching covered graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable JSON on stdout");

  auto* analyze = app.add_subcommand("analyze", "structure report for one graph");
  add_input(analyze, o);
  analyze->add_flag("--exhaustive", o.exhaustive, "also list every non-trivial tight cut");

  auto* classify = app.add_subcommand("classify", "classify a non-trivial tight cut");
  add_input(classify, o);
  classify->add_option("--shore", o.shore, "comma-separated vertex labels")->required();

  auto* decompose = app.add_subcommand("decompose", "tight cut decomposition");
  add_input(decompose, o);
  decompose->add_option("--strategy", o.strategy, "exhaustive | elp-first");
  decompose->add_option("--seed", o.seed, "first seed");
  decompose->add_option("--repeats", o.repeats, "runs with consecutive seeds")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "theorem sweep over a corpus");
  verify->add_option("--input", o.in.input, "graph6 corpus file (default: built-in enumeration)");
  verify->add_option("--max-n", o.max_n, "vertex cap (default 8 built-in, none for --input)")
      ->check(CLI::Range(2, tc::MultiGraph::kMaxVertices));
  verify->add_option("--theorems", o.theorems, "claims: 1.1,1.2,1.3,3.3,3.3*,props,all or single keys");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--counterexamples", o.counterexamples, "directory for candidate files");

  bool all_graphs = false;
  auto* corpus = app.add_subcommand("corpus", "print a corpus as graph6, manifest on stderr");
  corpus->add_option("--input", o.in.input, "graph6 file to filter (default: built-in enumeration)");
  corpus->add_option("--max-n", o.max_n, "vertex cap (default 8 built-in, none for --input)")
      ->check(CLI::Range(1, tc::MultiGraph::kMaxVertices));
  corpus->add_flag("--all", all_graphs, "keep graphs that are not matching covered");

  auto* gen = app.add_subcommand("gen", "print a generated graph");
  gen->add_option("--builtin", o.in.builtin, "k4, c6, petersen, h:N, hprime:N, chain:N, ...")->required();
  gen->add_option("--format", o.in.format, "graph6 | json")->check(CLI::IsMember({"graph6", "g6", "json"}));

  for (auto* sub : {analyze, classify, decompose, verify, corpus, gen}) {
    sub->add_flag("--json", o.json, "machine-readable JSON on stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*classify) return cmd_classify(o);
    if (*decompose) return cmd_decompose(o);
    if (*verify) return cmd_verify(o);
    if (*corpus) return cmd_corpus(o, all_graphs);
    if (*gen) return cmd_gen(o);
  } catch (const tc::Error& e) {
    std::cerr << "tightcut: " << e.what() << "\n";
    if (o.json) {
      std::cout << tc::Json{{"error", std::string(tc::error_code_name(e.code()))},
                            {"message", e.what()}}
                       .dump(2)
                << "\n";
    }
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "tightcut: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
