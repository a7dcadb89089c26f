#include "stashpeel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "stashpeel/gadget_checks.hpp"
#include "stashpeel/gadgets.hpp"
#include "stashpeel/parallel.hpp"
#include "stashpeel/peeling.hpp"
#include "stashpeel/random.hpp"
#include "stashpeel/reductions.hpp"
#include "stashpeel/stash_solvers.hpp"
#include "stashpeel/text_format.hpp"

namespace stashpeel {

namespace {

struct Config {
  std::string input;
  unsigned k = 2;
  unsigned d = 2;
  std::string mode = "vertex";
  std::size_t cap = kDefaultSizeCap;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> peel_seed;
  std::string tie = "max-degree";
  std::string from;
  std::string map_path;
  std::string stash_path;
  std::string graph_path;
  bool grid = false;
  std::string type;
  unsigned degree = 1;
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

Hypergraph load(const std::string& path) { return parse_hypergraph(read_file(path)); }

StashMode parse_mode(const std::string& mode) { return mode == "edge" ? StashMode::edge : StashMode::vertex; }

void print_result(std::ostream& out, const StashResult& r) {
  out << serialize_stash({r.kind == StashMode::vertex ? StashKind::vertex : StashKind::edge, r.stash});
  out << "size=" << r.size() << " optimal=" << (r.optimal ? "true" : "false") << '\n';
}

template <class Ids>
std::vector<std::uint32_t> raw(const Ids& ids) {
  std::vector<std::uint32_t> out;
  for (const auto& id : ids) out.push_back(id.value);
  return out;
}

int cmd_peel(const Config& c, std::ostream& out) {
  Hypergraph h = load(c.input);
  PeelOptions opts;
  opts.seed = c.peel_seed;
  const PeelTrace t = k_core(h, c.k, opts);
  Hypergraph core = h;
  for (VertexId v : t.peeled_vertices) core.remove_vertex(v);
  out << serialize_hypergraph(core);
  out << "# peeled:";
  for (VertexId v : t.peeled_vertices) out << ' ' << v.value;
  out << '\n';
  return kExitOk;
}

int cmd_stash_exact(const Config& c, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load(c.input);
  auto r = min_stash_exact(h, c.k, parse_mode(c.mode), c.cap);
  if (!r) {
    err << "infeasible: every " << c.mode << " stash needs more than " << c.cap << " elements (cap exceeded)\n";
    return kExitInfeasible;
  }
  print_result(out, *r);
  return kExitOk;
}

int cmd_stash_greedy(const Config& c, std::ostream& out) {
  const Hypergraph h = load(c.input);
  TieBreak tie = TieBreak::max_degree;
  if (c.tie == "min-id") tie = TieBreak::min_id;
  if (c.tie == "random") tie = TieBreak::seeded_random;
  print_result(out, greedy_stash(h, c.k, parse_mode(c.mode), tie, c.seed));
  return kExitOk;
}

int cmd_stash_2edge(const Config& c, std::ostream& out) {
  const Hypergraph g = load(c.input);
  const auto cert = two_edge_stash_standard(g);
  out << serialize_stash({StashKind::edge, raw(cert.removed_edges)});
  out << "# h=" << cert.h << " components=" << cert.components << '\n';
  out << "size=" << cert.h << " optimal=true\n";
  return kExitOk;
}

int cmd_cover(const Config& c, std::ostream& out, std::ostream& err) {
  const Hypergraph g = load(c.input);
  auto cover = min_vertex_cover_exact(g, c.cap);
  if (!cover) {
    err << "infeasible: every vertex cover needs more than " << c.cap << " vertices (cap exceeded)\n";
    return kExitInfeasible;
  }
  out << serialize_stash({StashKind::vertex, raw(*cover)});
  out << "size=" << cover->size() << " optimal=true\n";
  return kExitOk;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

int cmd_reduce(const Config& c, std::ostream& out, std::ostream& err) {
  const Hypergraph g = load(c.input);
  Reduction r = c.from == "vc" ? reduce_vc_to_vertex_stash(g, c.k, c.d) : reduce_vertex_to_edge_stash(g, c.k, c.d);
  const std::string map_path = c.map_path.empty() ? c.input + ".map" : c.map_path;
  write_text(map_path, serialize_map(r.map));
  out << serialize_hypergraph(r.graph);
  err << "map written to " << map_path << '\n';
  return kExitOk;
}

// The stash kind picks the direction: for a vc map a vertex stash of the
// reduced instance is normalized onto original vertices; for a vstash map an
// edge stash is lifted and a vertex stash is pushed. --graph enables the
// validity check (reduced instance when lifting, source when pushing).
int cmd_lift(const Config& c, std::ostream& out) {
  const ReductionMap map = parse_map(read_file(c.map_path));
  const StashFile stash = parse_stash(read_file(c.stash_path));
  std::optional<Hypergraph> graph;
  if (!c.graph_path.empty()) graph = load(c.graph_path);

  StashFile result;
  if (map.kind == ReductionKind::vertex_cover_to_vertex_stash) {
    if (stash.kind != StashKind::vertex) throw ParameterError("a vc map lifts vertex stashes only");
    const auto ids = to_vertex_ids(stash.ids);
    result = {StashKind::vertex, raw(graph ? normalize_stash(*graph, map, ids) : map_vertex_stash(map, ids))};
  } else if (stash.kind == StashKind::edge) {
    const auto ids = to_edge_ids(stash.ids);
    result = {StashKind::vertex, raw(graph ? lift_edge_stash(*graph, map, ids) : map_edge_stash(map, ids))};
  } else {
    const auto ids = to_vertex_ids(stash.ids);
    if (graph) {
      result = {StashKind::edge, raw(push_vertex_stash(*graph, map, ids))};
    } else {
      std::vector<std::uint32_t> picks;
      for (VertexId v : ids) {
        if (v.value >= map.estar_pick.size() || !map.estar_pick[v.value]) {
          throw NotFoundError("no estar edge for vertex " + std::to_string(v.value));
        }
        picks.push_back(map.estar_pick[v.value]->value);
      }
      std::sort(picks.begin(), picks.end());
      picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
      result = {StashKind::edge, picks};
    }
  }
  out << serialize_stash(result);
  out << "size=" << result.ids.size() << " optimal=false\n";
  return kExitOk;
}

std::string params_column(const GadgetParams& p) {
  std::ostringstream s;
  s << "k=" << p.k << " d=" << p.d;
  if (p.type != GadgetType::ck) s << " degree=" << p.degree;
  return s.str();
}

int cmd_verify_gadgets(const Config& c, std::ostream& out) {
  std::vector<GadgetParams> params;
  if (c.grid) {
    for (unsigned k = 2; k <= 6; ++k) {
      for (unsigned d = 2; d <= 4; ++d) {
        auto more = gadget_grid(k, d);
        params.insert(params.end(), more.begin(), more.end());
      }
    }
  } else {
    if (c.k < 2 || c.d < 2) throw ParameterError("verify-gadgets needs k >= 2 and d >= 2");
    params = gadget_grid(c.k, c.d);
  }
  std::vector<GadgetReport> reports(params.size());
  parallel_for(params.size(), [&](std::size_t i) { reports[i] = check_gadget(build_gadget(params[i])); });

  bool all = true;
  out << "gadget\tparams\tcheck\tpass\twitness\n";
  for (const auto& r : reports) {
    for (const auto& check : r.checks) {
      out << to_string(r.params.type) << '\t' << params_column(r.params) << '\t' << check.property << '\t'
          << (check.pass ? "pass" : "FAIL") << '\t' << check.witness << '\n';
      all = all && check.pass;
    }
    out << to_string(r.params.type) << '\t' << params_column(r.params) << "\tparallel-edges\t"
        << (r.parallel_edges ? "yes" : "no") << "\t\n";
  }
  return all ? kExitOk : kExitInfeasible;
}

int cmd_gadget(const Config& c, std::ostream& out) {
  const auto type = gadget_type_from_string(c.type);
  if (!type) throw ParameterError("unknown gadget type '" + c.type + "'");
  out << serialize_gadget(build_gadget({*type, c.k, c.d, c.degree, 0}));
  return kExitOk;
}

int cmd_gen_random(const Config& c, std::ostream& out) {
  out << serialize_hypergraph(gen_random(c.vertices, c.edges, c.d, c.seed));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"k-core peeling, minimum stashes and stash hardness gadgets", "stashpeel"};
  app.require_subcommand(1);
  auto positive = CLI::PositiveNumber;
  auto file = [&](CLI::App* sub) { sub->add_option("file", c.input, "instance file")->required(); };

  auto* peel = app.add_subcommand("peel", "print the k-core and the peel order");
  peel->add_option("--k", c.k)->required()->check(positive);
  peel->add_option("--seed", c.peel_seed, "randomize the worklist order");
  file(peel);

  auto* exact = app.add_subcommand("stash-exact", "minimum stash by exhaustive search");
  exact->add_option("--k", c.k)->required()->check(positive);
  exact->add_option("--mode", c.mode)->required()->check(CLI::IsMember({"vertex", "edge"}));
  exact->add_option("--cap", c.cap, "largest stash size searched");
  file(exact);

  auto* greedy = app.add_subcommand("stash-greedy", "heuristic stash");
  greedy->add_option("--k", c.k)->required()->check(positive);
  greedy->add_option("--mode", c.mode)->required()->check(CLI::IsMember({"vertex", "edge"}));
  greedy->add_option("--tie", c.tie)->check(CLI::IsMember({"max-degree", "min-id", "random"}));
  greedy->add_option("--seed", c.seed);
  file(greedy);

  auto* two = app.add_subcommand("stash-2edge", "minimum 2-edge-stash of a standard graph");
  file(two);

  auto* cover = app.add_subcommand("cover", "minimum vertex cover of a standard graph");
  cover->add_option("--cap", c.cap);
  file(cover);

  auto* reduce = app.add_subcommand("reduce", "reduce vertex cover or vertex stash instances");
  reduce->add_option("--from", c.from)->required()->check(CLI::IsMember({"vc", "vstash"}));
  reduce->add_option("--k", c.k)->required()->check(positive);
  reduce->add_option("--d", c.d)->required()->check(positive);
  reduce->add_option("--map", c.map_path, "sidecar map path (default <file>.map)");
  file(reduce);

  auto* lift = app.add_subcommand("lift", "map a stash across a reduction");
  lift->add_option("--map", c.map_path)->required();
  lift->add_option("--stash", c.stash_path)->required();
  lift->add_option("--graph", c.graph_path, "instance used to validate the stash");

  auto* verify = app.add_subcommand("verify-gadgets", "check gadget properties, TSV report");
  verify->add_option("--k", c.k)->check(positive);
  verify->add_option("--d", c.d)->check(positive);
  verify->add_flag("--grid", c.grid, "k = 2..6, d = 2..4");

  auto* gadget = app.add_subcommand("gadget", "print one gadget");
  gadget->add_option("--type", c.type)->required()->check(
      CLI::IsMember({"ck", "b2", "b3", "simple-stable", "stable", "tree-stable", "vertex"}));
  gadget->add_option("--k", c.k)->check(positive);
  gadget->add_option("--d", c.d)->check(positive);
  gadget->add_option("--degree", c.degree, "m, p or delta");

  auto* gen = app.add_subcommand("gen-random", "seeded random d-uniform hypergraph");
  gen->add_option("--vertices", c.vertices)->required();
  gen->add_option("--edges", c.edges)->required();
  gen->add_option("--d", c.d)->required();
  gen->add_option("--seed", c.seed);

  std::vector<const char*> argv{"stashpeel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*peel) return cmd_peel(c, out);
    if (*exact) return cmd_stash_exact(c, out, err);
    if (*greedy) return cmd_stash_greedy(c, out);
    if (*two) return cmd_stash_2edge(c, out);
    if (*cover) return cmd_cover(c, out, err);
    if (*reduce) return cmd_reduce(c, out, err);
    if (*lift) return cmd_lift(c, out);
    if (*verify) return cmd_verify_gadgets(c, out);
    if (*gadget) return cmd_gadget(c, out);
    if (*gen) return cmd_gen_random(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace stashpeel
