#include "stashpeel/gadget_checks.hpp"

#include <algorithm>
#include <sstream>

#include "stashpeel/peeling.hpp"
#include "stashpeel/random.hpp"

namespace stashpeel {

bool GadgetReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string GadgetReport::label() const {
  std::ostringstream out;
  out << to_string(params.type) << " k=" << params.k << " d=" << params.d;
  if (params.type != GadgetType::ck) out << " degree=" << params.degree;
  return out.str();
}

Harness embed_with_anchors(const Gadget& g) {
  Harness h;
  h.k = g.params.k;
  h.graph = g.graph;
  h.internal = g.internal_vertices();
  const std::size_t d = g.params.d;
  for (const Port& port : g.ports) {
    auto cluster = h.graph.add_vertices(port.kind == PortKind::terminal ? d - 1 : d);
    std::vector<VertexId> anchor_edge = cluster;
    if (port.kind == PortKind::terminal) anchor_edge.push_back(port.members.front());
    for (unsigned i = 0; i < h.k; ++i) h.graph.add_edge(anchor_edge);
    h.port_kind.push_back(port.kind);
    if (port.kind == PortKind::terminal) {
      h.port_vertex.push_back(port.members.front());
      h.port_edge.emplace_back();
    } else {
      std::vector<VertexId> members = port.members;
      members.insert(members.end(), cluster.begin(), cluster.begin() + static_cast<long>(g.slots(port)));
      h.port_edge.push_back(h.graph.add_edge(members));
      h.port_vertex.emplace_back();
    }
  }
  return h;
}

PeelOutcome peel_harness(const Gadget& g, const Harness& harness, const std::vector<char>& removed,
                         std::optional<EdgeId> stashed) {
  std::vector<VertexId> stash_vertices;
  std::vector<EdgeId> stash_edges;
  for (std::size_t i = 0; i < harness.port_kind.size(); ++i) {
    if (i >= removed.size() || !removed[i]) continue;
    if (harness.port_kind[i] == PortKind::terminal) {
      stash_vertices.push_back(harness.port_vertex[i]);
    } else {
      stash_edges.push_back(harness.port_edge[i]);
    }
  }
  if (stashed) stash_edges.push_back(*stashed);
  auto trace = k_core_after(harness.graph, harness.k, stash_vertices, stash_edges);
  PeelOutcome out;
  for (VertexId v : harness.internal) {
    if (std::binary_search(trace.core_vertices.begin(), trace.core_vertices.end(), v)) {
      ++out.internal_survivors;
      out.survivors.push_back(v);
    }
  }
  out.primary_survives =
      g.primary && std::binary_search(trace.core_vertices.begin(), trace.core_vertices.end(), *g.primary);
  return out;
}

namespace {

std::string join_ports(const std::vector<char>& mask, char marker) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] != marker) continue;
    out << (first ? "" : ",") << i;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string survivors_note(const PeelOutcome& o) {
  std::ostringstream out;
  out << o.internal_survivors << " internal vertices survive";
  if (!o.survivors.empty()) out << " (first " << o.survivors.front().value << ')';
  return out.str();
}

CheckResult min_degree_check(const Gadget& g, const Harness& h) {
  for (VertexId v : h.internal) {
    if (h.graph.degree(v) < h.k) {
      return {"min-degree", false, "vertex " + std::to_string(v.value) + " has degree " +
                                       std::to_string(h.graph.degree(v))};
    }
  }
  (void)g;
  return {"min-degree", true, ""};
}

CheckResult port_count_check(const Gadget& g, std::size_t expected, const std::string& name = "port-count") {
  if (g.ports.size() == expected) return {name, true, ""};
  return {name, false, "has " + std::to_string(g.ports.size()) + " ports, expected " + std::to_string(expected)};
}

std::vector<char> single_removal(std::size_t ports, std::size_t which) {
  std::vector<char> mask(ports, 0);
  mask[which] = 1;
  return mask;
}

// Removal masks to try: all of them when small, otherwise a fixed-seed sample
// plus every singleton and the empty/full masks.
std::vector<std::vector<char>> removal_masks(std::size_t ports, std::size_t exhaustive_limit) {
  std::vector<std::vector<char>> out;
  if (ports <= exhaustive_limit) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ports); ++bits) {
      std::vector<char> mask(ports, 0);
      for (std::size_t i = 0; i < ports; ++i) mask[i] = (bits >> i) & 1U;
      out.push_back(std::move(mask));
    }
    return out;
  }
  out.emplace_back(ports, 0);
  out.emplace_back(ports, 1);
  for (std::size_t i = 0; i < ports; ++i) {
    out.push_back(single_removal(ports, i));
    std::vector<char> keep_one(ports, 1);
    keep_one[i] = 0;
    out.push_back(std::move(keep_one));
  }
  Rng rng(0);
  for (int s = 0; s < 512; ++s) {
    std::vector<char> mask(ports);
    for (auto& bit : mask) bit = static_cast<char>(rng.below(2));
    out.push_back(std::move(mask));
  }
  return out;
}

CheckResult estar_check(const Gadget& g, const Harness& h, const std::string& name) {
  if (g.estar.empty()) return {name, false, "estar is empty"};
  const std::vector<char> none(g.ports.size(), 0);
  for (EdgeId e : g.estar) {
    auto o = peel_harness(g, h, none, e);
    if (o.internal_survivors > 0) {
      return {name, false, "stash edge " + std::to_string(e.value) + ": " + survivors_note(o)};
    }
  }
  return {name, true, ""};
}

}  // namespace

GadgetReport check_ck_properties(const Gadget& g) {
  GadgetReport r{g.params, g.has_parallel_edges(), {}};
  const unsigned k = g.params.k;
  std::vector<std::size_t> terminal_ports;
  for (std::size_t i = 0; i < g.ports.size(); ++i) {
    if (g.ports[i].kind == PortKind::terminal) terminal_ports.push_back(i);
  }
  if (terminal_ports.size() != 2) {
    r.checks.push_back({"terminals", false, "expected 2 terminal ports, found " + std::to_string(terminal_ports.size())});
    return r;
  }
  const Harness h = embed_with_anchors(g);
  {
    CheckResult c{"terminal-degree", true, ""};
    for (auto i : terminal_ports) {
      auto deg = g.graph.degree(g.ports[i].members.front());
      if (deg != k) {
        c = {"terminal-degree", false, "terminal " + g.ports[i].name + " has " + std::to_string(deg) + " edges"};
        break;
      }
    }
    r.checks.push_back(c);
  }
  r.checks.push_back(min_degree_check(g, h));
  for (auto i : terminal_ports) {
    auto o = peel_harness(g, h, single_removal(g.ports.size(), i));
    r.checks.push_back({"peels-without-" + g.ports[i].name, o.internal_survivors == 0,
                        o.internal_survivors == 0 ? "" : "removed " + g.ports[i].name + ": " + survivors_note(o)});
  }
  auto o = peel_harness(g, h, std::vector<char>(g.ports.size(), 0));
  const bool all = o.internal_survivors == h.internal.size();
  r.checks.push_back({"unpeelable-with-both", all, all ? "" : "no removal: " + survivors_note(o)});
  return r;
}

GadgetReport check_b_block(const Gadget& g) {
  GadgetReport r{g.params, g.has_parallel_edges(), {}};
  const Harness h = embed_with_anchors(g);
  r.checks.push_back(port_count_check(g, g.params.degree));
  r.checks.push_back(min_degree_check(g, h));
  auto o = peel_harness(g, h, std::vector<char>(g.ports.size(), 0));
  const bool all = o.internal_survivors == h.internal.size();
  r.checks.push_back({"unpeelable-all-ports", all, all ? "" : "no removal: " + survivors_note(o)});
  CheckResult each{"peels-without-port", true, ""};
  for (std::size_t i = 0; i < g.ports.size(); ++i) {
    auto without = peel_harness(g, h, single_removal(g.ports.size(), i));
    if (without.internal_survivors > 0) {
      each = {"peels-without-port", false, "removed port " + std::to_string(i) + ": " + survivors_note(without)};
      break;
    }
  }
  r.checks.push_back(each);
  return r;
}

GadgetReport check_stable_block(const Gadget& g, unsigned k) {
  Gadget at_k = g;
  at_k.params.k = k;
  GadgetReport r{g.params, g.has_parallel_edges(), {}};
  const Harness h = embed_with_anchors(at_k);
  const std::size_t m = at_k.ports.size();
  r.checks.push_back(port_count_check(at_k, at_k.params.degree));
  r.checks.push_back(min_degree_check(at_k, h));

  CheckResult held{"unpeelable-with-ports", true, ""};
  for (const auto& mask : removal_masks(m, kExhaustiveStablePorts)) {
    if (std::all_of(mask.begin(), mask.end(), [](char c) { return c != 0; })) continue;
    auto o = peel_harness(at_k, h, mask);
    if (!o.primary_survives || o.internal_survivors == 0) {
      held = {"unpeelable-with-ports", false, "kept ports " + join_ports(mask, 0) + ": " + survivors_note(o)};
      break;
    }
  }
  r.checks.push_back(held);

  auto o = peel_harness(at_k, h, std::vector<char>(m, 1));
  r.checks.push_back({"peels-without-ports", o.internal_survivors == 0,
                      o.internal_survivors == 0 ? "" : "all ports removed: " + survivors_note(o)});
  r.checks.push_back(estar_check(at_k, h, "estar-peels"));
  return r;
}

GadgetReport check_vertex_gadget(const Gadget& g) {
  GadgetReport r{g.params, g.has_parallel_edges(), {}};
  const Harness h = embed_with_anchors(g);
  const std::size_t delta = g.params.degree;
  r.checks.push_back(port_count_check(g, delta, "P1-port-count"));

  CheckResult p2{"P2-threshold", true, ""};
  for (const auto& mask : removal_masks(g.ports.size(), kExhaustiveVertexPorts)) {
    const auto remaining = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 0));
    auto o = peel_harness(g, h, mask);
    const bool ok = remaining < g.params.k ? o.internal_survivors == 0 : o.primary_survives;
    if (!ok) {
      p2 = {"P2-threshold", false,
            "kept ports " + join_ports(mask, 0) + " (" + std::to_string(remaining) + " left): " + survivors_note(o)};
      break;
    }
  }
  r.checks.push_back(p2);
  r.checks.push_back(estar_check(g, h, "P3-estar"));
  return r;
}

GadgetReport check_gadget(const Gadget& g) {
  switch (g.params.type) {
    case GadgetType::ck: return check_ck_properties(g);
    case GadgetType::two_block:
    case GadgetType::three_block: return check_b_block(g);
    case GadgetType::simple_stable:
    case GadgetType::stable:
    case GadgetType::tree_stable: return check_stable_block(g, g.params.k);
    case GadgetType::vertex: return check_vertex_gadget(g);
  }
  return {};
}

std::vector<GadgetParams> gadget_grid(unsigned k, unsigned d) {
  std::vector<GadgetParams> out;
  out.push_back({GadgetType::ck, k, d, 0, 0});
  if (k >= 3) {
    out.push_back({GadgetType::two_block, k, d, 2, 0});
    out.push_back({GadgetType::three_block, k, d, 3, 0});
    for (unsigned m = 1; m + 1 <= k; ++m) out.push_back({GadgetType::simple_stable, k, d, m, 0});
    for (unsigned m = 1; m <= 7; ++m) out.push_back({GadgetType::stable, k, d, m, 0});
  } else if (k == 2 && d >= 3) {
    for (unsigned p = 1; p <= 5; ++p) out.push_back({GadgetType::tree_stable, 2, d, p, 0});
  }
  if (k >= 3 || d >= 3) {
    for (unsigned delta = 0; delta <= 5; ++delta) out.push_back({GadgetType::vertex, k, d, delta, 0});
  }
  return out;
}

}  // namespace stashpeel
