// critgraph: command line front end for the library.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "critgraph/critical.hpp"
#include "critgraph/cycles.hpp"
#include "critgraph/decomp.hpp"
#include "critgraph/error.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/io.hpp"
#include "critgraph/structure3.hpp"
#include "critgraph/verify.hpp"

using nlohmann::json;
using namespace critgraph;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
  bool pretty = false;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.path, "graph6 or edge-list file, '-' for stdin");
  cmd->add_option("--format", in.format, "auto, g6 or edges");
  cmd->add_flag("--pretty", in.pretty, "indent JSON output");
}

std::vector<SignedGraph> load(const InputOptions& in) {
  const io::Format format = io::parse_format(in.format);
  if (in.path == "-") return io::read_graphs(std::cin, format);
  std::ifstream file(in.path);
  if (!file) throw Error(ErrorKind::BadParameters, "cannot open '" + in.path + "'");
  return io::read_graphs(file, format);
}

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParameters, "bad vertex '" + item + "'");
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json edge_json(const Graph& g, std::span<const EdgeId> ids) {
  json out = json::array();
  for (EdgeId e : ids) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

json cycle_json(const Cycle& c) { return {{"vertices", c.vertices}, {"parity", c.parity}}; }

std::string kind_name(Block::Kind k) {
  switch (k) {
    case Block::Kind::isolated_vertex: return "vertex";
    case Block::Kind::edge: return "edge";
    case Block::Kind::two_connected: return "two_connected";
  }
  return "?";
}

std::optional<int> parse_parity(const std::string& p) {
  if (p == "odd") return 1;
  if (p == "even") return 0;
  if (p == "all") return std::nullopt;
  throw Error(ErrorKind::BadParameters, "parity must be odd, even or all");
}

std::optional<Cycle> parse_anchor(const SignedGraph& sg, const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return make_cycle(sg, parse_vertex_list(text));
  } catch (const Error& err) {
    throw Error(ErrorKind::BadAnchor, err.what());
  }
}

Gadget parse_gadget(const std::string& name) {
  if (name == "edge") return Gadget::edge;
  if (name == "triangle") return Gadget::triangle;
  if (name == "k4") return Gadget::k4;
  if (name == "c4") return Gadget::c4;
  throw Error(ErrorKind::BadParameters, "unknown gadget '" + name + "'");
}

SignedGraph named_graph(const std::string& spec) {
  const auto parts = split([&] {
    std::string s = spec;
    for (char& ch : s) {
      if (ch == ':') ch = ',';
    }
    return s;
  }());
  if (parts.empty()) throw Error(ErrorKind::BadParameters, "empty graph name");
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw Error(ErrorKind::BadParameters, "missing parameter in '" + spec + "'");
    return std::stoi(parts[i]);
  };
  const std::string& name = parts[0];
  if (name == "wheel") return SignedGraph::lift(wheel(arg(1), parts.size() > 2 ? arg(2) : 1).graph);
  if (name == "section8") return section8_construction(arg(1)).graph;
  if (name == "complete") return SignedGraph::lift(complete_graph(arg(1)));
  if (name == "cycle") return SignedGraph::lift(cycle_graph(arg(1)));
  if (name == "path") return SignedGraph::lift(path_graph(arg(1)));
  if (name == "petersen") return SignedGraph::lift(petersen_graph());
  if (name == "bipartite") return SignedGraph::lift(complete_bipartite(arg(1), arg(2)));
  throw Error(ErrorKind::BadParameters, "unknown named graph '" + name + "'");
}

void write_graph(const SignedGraph& sg, const std::string& format) {
  if (format == "g6" || format == "graph6") {
    if (!sg.is_plain()) throw Error(ErrorKind::BadParameters, "graph6 cannot carry parities");
    std::cout << io::to_graph6(sg.graph()) << '\n';
  } else if (format == "edges") {
    std::cout << (sg.is_plain() ? io::write_edge_list(sg.graph()) : io::write_signed_edge_list(sg));
  } else {
    throw Error(ErrorKind::BadParameters, "output format must be g6 or edges");
  }
}

int exit_code_for(const Error& err) {
  switch (err.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::BadParameters:
    case ErrorKind::UnknownCheck:
    case ErrorKind::ScaleGuard:
    case ErrorKind::BadAnchor: return kExitUsage;
    default: return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical graph and odd cycle toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // blocks ------------------------------------------------------------------
  InputOptions blocks_in;
  auto* blocks = app.add_subcommand("blocks", "block tree of each input graph");
  add_input(blocks, blocks_in);
  blocks->callback([&] {
    for (const SignedGraph& sg : load(blocks_in)) {
      const Graph& g = sg.graph();
      const BlockTree tree = block_tree(g);
      json out{{"graph", graph_id(sg)}, {"cut_vertices", tree.cut_vertices}, {"end_blocks", tree.end_blocks()}};
      json list = json::array();
      for (const Block& b : tree.blocks) {
        list.push_back({{"vertices", b.vertices}, {"edges", edge_json(g, b.edges)}, {"kind", kind_name(b.kind())},
                        {"t", b.t()}});
      }
      out["blocks"] = list;
      const TAdditivity add = t_additivity_check(g);
      out["t"] = add.t_total;
      out["t_additive"] = add.holds();
      emit(out, blocks_in.pretty);
    }
  });

  // ears --------------------------------------------------------------------
  InputOptions ears_in;
  std::string ears_anchor;
  auto* ears = app.add_subcommand("ears", "ear decomposition, optionally starting from an anchor cycle");
  add_input(ears, ears_in);
  ears->add_option("--anchor", ears_anchor, "comma separated cycle vertices");
  ears->callback([&] {
    for (const SignedGraph& sg : load(ears_in)) {
      const EarDecomposition dec = ear_decomposition(sg.graph(), parse_anchor(sg, ears_anchor));
      json list = json::array();
      for (const Ear& e : dec.ears) list.push_back({{"vertices", e.vertices}, {"closed", e.closed}});
      const auto problem = validate_ear_decomposition(sg.graph(), dec);
      json out{{"graph", graph_id(sg)}, {"ears", list}, {"count", dec.ears.size()}, {"valid", !problem}};
      if (problem) out["problem"] = *problem;
      emit(out, ears_in.pretty);
    }
  });

  // cycles ------------------------------------------------------------------
  InputOptions cycles_in;
  std::string cycles_parity = "all";
  bool cycles_list = false;
  Vertex cycles_through = -1;
  auto* cycles = app.add_subcommand("cycles", "count or list simple cycles by parity");
  add_input(cycles, cycles_in);
  cycles->add_option("--parity", cycles_parity, "odd, even or all");
  cycles->add_flag("--list", cycles_list, "include every cycle");
  cycles->add_option("--through", cycles_through, "only cycles through this vertex");
  cycles->callback([&] {
    const auto parity = parse_parity(cycles_parity);
    const Budget budget = Budget::from_env();
    for (const SignedGraph& sg : load(cycles_in)) {
      CycleSet set;
      if (cycles_through >= 0) {
        std::vector<Cycle> all;
        for (int p : {0, 1}) {
          if (parity && *parity != p) continue;
          for (const Cycle& c : cycles_through_vertex(sg, cycles_through, p, std::nullopt, budget)) all.push_back(c);
        }
        set = CycleSet(std::move(all));
      } else {
        set = enumerate_cycles(sg, parity, budget);
      }
      json out{{"graph", graph_id(sg)},
               {"odd", set.odd_count()},
               {"even", set.even_count()},
               {"total", set.size()},
               {"t", is_connected(sg.graph()) ? json(t_value(sg.graph())) : json(nullptr)},
               {"budget", budget.max_items}};
      if (parity) {
        out.erase(*parity == 1 ? "even" : "odd");
        out["parity"] = *parity == 1 ? "odd" : "even";
      }
      if (cycles_list) {
        json list = json::array();
        for (const Cycle& c : set) list.push_back(cycle_json(c));
        out["cycles"] = list;
      }
      emit(out, cycles_in.pretty);
    }
  });

  // paths -------------------------------------------------------------------
  InputOptions paths_in;
  Vertex px = 0;
  Vertex py = 1;
  bool paths_list = false;
  auto* paths = app.add_subcommand("paths", "simple (x,y)-paths by parity");
  add_input(paths, paths_in);
  paths->add_option("-x", px, "first end")->required();
  paths->add_option("-y", py, "second end")->required();
  paths->add_flag("--list", paths_list, "include every path");
  paths->callback([&] {
    const Budget budget = Budget::from_env();
    for (const SignedGraph& sg : load(paths_in)) {
      const PathSet ps = enumerate_paths(sg, px, py, std::nullopt, budget);
      json out{{"graph", graph_id(sg)},
               {"x", px},
               {"y", py},
               {"odd", ps.count(1, false)},
               {"even", ps.count(0, false)},
               {"odd_without_direct", ps.count(1, true)},
               {"even_without_direct", ps.count(0, true)}};
      if (paths_list) {
        json list = json::array();
        for (const Path& p : ps.paths) list.push_back({{"vertices", p.vertices}, {"parity", p.parity}});
        out["paths"] = list;
      }
      emit(out, paths_in.pretty);
    }
  });

  // nonsep ------------------------------------------------------------------
  InputOptions nonsep_in;
  Vertex avoid_vertex = -1;
  std::string avoid_set;
  bool nonsep_all = false;
  bool nonsep_unchecked = false;
  auto* nonsep = app.add_subcommand("nonsep", "non-separating induced odd cycle search");
  add_input(nonsep, nonsep_in);
  nonsep->add_option("--avoid-vertex", avoid_vertex, "vertex the cycle must avoid");
  nonsep->add_option("--avoid", avoid_set, "comma separated vertices of a connected subgraph to avoid");
  nonsep->add_flag("--all", nonsep_all, "list every such cycle");
  nonsep->add_flag("--unchecked", nonsep_unchecked, "skip hypothesis checks");
  nonsep->callback([&] {
    const Budget budget = Budget::from_env();
    AvoidSpec avoid;
    if (avoid_vertex >= 0) avoid = AvoidSpec::avoid_vertex(avoid_vertex);
    if (!avoid_set.empty()) avoid = AvoidSpec::avoid_subgraph(parse_vertex_list(avoid_set));
    for (const SignedGraph& sg : load(nonsep_in)) {
      json out{{"graph", graph_id(sg)}};
      if (nonsep_all) {
        json list = json::array();
        for (const Cycle& c : all_nonseparating_induced_odd_cycles(sg, avoid.mask(), budget)) {
          list.push_back(cycle_json(c));
        }
        out["cycles"] = list;
      } else {
        try {
          out["cycle"] = cycle_json(nonseparating_induced_odd_cycle(sg, avoid, !nonsep_unchecked, budget));
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NotFound && err.kind() != ErrorKind::HypothesisViolated) throw;
          out["cycle"] = nullptr;
          out["error"] = std::string(to_string(err.kind())) + ": " + err.what();
        }
      }
      emit(out, nonsep_in.pretty);
    }
  });

  // basic -------------------------------------------------------------------
  InputOptions basic_in;
  std::string basic_anchor;
  bool basic_list = false;
  auto* basic = app.add_subcommand("basic", "basic cycles for an anchored 3-connected non-bipartite graph");
  add_input(basic, basic_in);
  basic->add_option("--anchor", basic_anchor, "comma separated anchor cycle vertices");
  basic->add_flag("--list", basic_list, "include every basic cycle");
  basic->callback([&] {
    const Budget budget = Budget::from_env();
    for (const SignedGraph& sg : load(basic_in)) {
      const AnchoredInstance inst = build_anchored(sg, parse_anchor(sg, basic_anchor), budget);
      const BasicCycles bc = basic_cycles(inst, budget);
      json out{{"graph", graph_id(sg)},
               {"anchor", inst.anchor.vertices},
               {"m", inst.m},
               {"t", inst.t},
               {"good_pairs", bc.good_pair_count},
               {"basic", bc.basic.size()},
               {"even_shadow", bc.even_shadow.size()},
               {"h_two_connected", h_is_two_connected(inst)}};
      bool pass = true;
      if (h_is_two_connected(inst)) {
        const auto bound = lemma_3_1_bound(inst);
        out["lemma3.1"] = {{"bound", bound}, {"holds", bc.basic.size() >= bound}};
        pass = bc.basic.size() >= bound;
      } else if (inst.h.graph.order() >= 2 && end_block_count(inst) >= 2) {
        const auto bound = lemma_3_3_bound(inst);
        const bool holds = static_cast<std::int64_t>(bc.basic.size()) >= bound;
        out["lemma3.3"] = {{"bound", bound}, {"end_blocks", end_block_count(inst)}, {"holds", holds}};
        pass = holds;
      }
      out["pass"] = pass;
      if (!pass) exit_code = kExitFail;
      if (basic_list) {
        json list = json::array();
        for (const Cycle& c : bc.basic) list.push_back(cycle_json(c));
        out["cycles"] = list;
      }
      emit(out, basic_in.pretty);
    }
  });

  // critical ----------------------------------------------------------------
  InputOptions critical_in;
  int critical_k = 0;
  auto* critical = app.add_subcommand("critical", "certify k-criticality");
  add_input(critical, critical_in);
  critical->add_option("-k", critical_k, "target chromatic number (default: chi(G))");
  critical->callback([&] {
    for (const SignedGraph& sg : load(critical_in)) {
      const Graph& g = sg.graph();
      const int chi = chromatic_number(g);
      const int k = critical_k > 0 ? critical_k : chi;
      const auto cert = k >= 3 ? certify_k_critical(g, k) : std::nullopt;
      json out{{"graph", graph_id(sg)}, {"chromatic_number", chi}, {"k", k}, {"critical", cert.has_value()}};
      if (cert) out["coloring"] = cert->coloring;
      emit(out, critical_in.pretty);
    }
  });

  // gallai ------------------------------------------------------------------
  InputOptions gallai_in;
  int gallai_k = 0;
  auto* gallai = app.add_subcommand("gallai", "critical subgraph family of a k-critical graph");
  add_input(gallai, gallai_in);
  gallai->add_option("-k", gallai_k, "chromatic number (default: chi(G))");
  gallai->callback([&] {
    for (const SignedGraph& sg : load(gallai_in)) {
      const Graph& g = sg.graph();
      const int k = gallai_k > 0 ? gallai_k : chromatic_number(g);
      const CriticalFamily fam = gallai_family(g, k);
      json members = json::array();
      for (const EdgeSubset& m : fam.members) members.push_back(edge_json(g, m));
      json out{{"graph", graph_id(sg)},
               {"k", k},
               {"family_size", fam.size()},
               {"members", members},
               {"separation_holds", fam.separation_holds},
               {"lists_distinct", fam.lists_distinct},
               {"degenerate", fam.degenerate}};
      const CheckReport thm = run_check("thm1.2", sg);
      out["thm1.2"] = to_json(thm, false);
      emit(out, gallai_in.pretty);
    }
  });

  // gen ---------------------------------------------------------------------
  CorpusSpec gen_spec;
  std::string gen_family = "four_critical";
  std::string gen_named;
  std::string gen_format = "g6";
  std::string fixture_kind;
  int fixture_length = 5;
  std::string fixture_gadgets = "edge,edge";
  int fixture_per_vertex = 2;
  auto* gen = app.add_subcommand("gen", "corpus, named graphs and anchored fixtures");
  gen->add_option("--family", gen_family,
                  "all_connected, four_critical, three_connected, three_connected_nonbipartite, k_critical");
  gen->add_option("--max-n", gen_spec.max_n, "largest order (internal enumeration: <= 10)");
  gen->add_option("--k", gen_spec.k, "k for the k_critical family");
  gen->add_option("--source", gen_spec.graph6_source, "filter a graph6 file ('-' for stdin) instead");
  gen->add_option("--named", gen_named, "wheel:n[:d], section8:n, complete:n, cycle:n, path:n, petersen, bipartite:a:b");
  gen->add_option("--fixture", fixture_kind, "end-block or chain");
  gen->add_option("--anchor-length", fixture_length, "fixture anchor cycle length");
  gen->add_option("--gadgets", fixture_gadgets, "fixture gadgets: edge, triangle, k4, c4");
  gen->add_option("--per-vertex", fixture_per_vertex, "anchor neighbors per gadget vertex");
  gen->add_option("--out-format", gen_format, "g6 or edges");
  gen->callback([&] {
    if (!gen_named.empty()) {
      write_graph(named_graph(gen_named), gen_format);
      return;
    }
    if (!fixture_kind.empty()) {
      std::vector<Gadget> gadgets;
      for (const std::string& name : split(fixture_gadgets)) gadgets.push_back(parse_gadget(name));
      AnchoredFixture fx;
      if (fixture_kind == "end-block") {
        fx = end_block_fixture(fixture_length, gadgets, fixture_per_vertex, "cli");
      } else if (fixture_kind == "chain") {
        fx = chain_fixture(fixture_length, gadgets, fixture_per_vertex, "cli");
      } else {
        throw Error(ErrorKind::BadParameters, "fixture must be end-block or chain");
      }
      write_graph(fx.host, gen_format);
      return;
    }
    gen_spec.family = parse_family(gen_family);
    if (gen_spec.graph6_source.empty() && gen_spec.max_n < 1) {
      throw Error(ErrorKind::BadParameters, "--max-n or --source is required");
    }
    for_each_corpus_graph(gen_spec, [&](const Graph& g) { write_graph(SignedGraph::lift(g), gen_format); });
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run bound checks");
  verify->require_subcommand(1);
  SweepOptions sweep_opts;
  std::string sweep_family = "four_critical";
  std::string sweep_checks;
  std::string sweep_out;
  bool no_timing = false;
  auto* sweep_cmd = verify->add_subcommand("sweep", "run checks over a corpus");
  sweep_cmd->add_option("--family", sweep_family, "corpus family");
  sweep_cmd->add_option("--max-n", sweep_opts.corpus.max_n, "largest order");
  sweep_cmd->add_option("--k", sweep_opts.corpus.k, "k for the k_critical family");
  sweep_cmd->add_option("--source", sweep_opts.corpus.graph6_source, "graph6 file instead of enumeration");
  sweep_cmd->add_option("--checks", sweep_checks, "comma separated check names")->required();
  sweep_cmd->add_option("-j,--jobs", sweep_opts.jobs, "worker threads (0: hardware concurrency)");
  sweep_cmd->add_option("--out", sweep_out, "JSONL report path");
  sweep_cmd->add_option("--time-limit-ms", sweep_opts.time_limit_ms, "per-graph wall clock limit");
  sweep_cmd->add_flag("--no-timing", no_timing, "omit timing from the report");
  sweep_cmd->callback([&] {
    sweep_opts.corpus.family = parse_family(sweep_family);
    sweep_opts.checks = split(sweep_checks);
    const SweepSummary summary = sweep(sweep_opts);
    if (!sweep_out.empty()) {
      std::ofstream out(sweep_out);
      if (!out) throw Error(ErrorKind::BadParameters, "cannot write '" + sweep_out + "'");
      write_jsonl(out, summary.reports, !no_timing);
    }
    emit(summary.summary_json(), true);
    exit_code = summary.exit_code();
  });

  InputOptions one_in;
  std::string one_checks;
  auto* one = verify->add_subcommand("one", "run checks on every graph of an input file");
  add_input(one, one_in);
  one->add_option("--check", one_checks, "comma separated check names")->required();
  one->add_flag("--no-timing", no_timing, "omit timing from the report");
  one->callback([&] {
    const auto names = split(one_checks);
    for (const std::string& name : names) {
      if (!is_check_name(name)) throw Error(ErrorKind::UnknownCheck, "unknown check '" + name + "'");
    }
    for (const SignedGraph& sg : load(one_in)) {
      for (const std::string& name : names) {
        const CheckReport r = run_check(name, sg);
        if (r.status == CheckStatus::fail || r.status == CheckStatus::error) exit_code = kExitFail;
        emit(to_json(r, !no_timing), one_in.pretty);
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  } catch (const Error& err) {
    std::cerr << "critgraph: " << to_string(err.kind()) << ": " << err.what() << '\n';
    return exit_code_for(err);
  } catch (const std::exception& err) {
    std::cerr << "critgraph: internal error: " << err.what() << '\n';
    return kExitFail;
  }
  return exit_code;
}
