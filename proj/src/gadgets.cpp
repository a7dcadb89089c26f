#include "stashpeel/gadgets.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stashpeel/text_format.hpp"

namespace stashpeel {

std::string to_string(GadgetType type) {
  switch (type) {
    case GadgetType::ck: return "ck";
    case GadgetType::two_block: return "b2";
    case GadgetType::three_block: return "b3";
    case GadgetType::simple_stable: return "simple-stable";
    case GadgetType::stable: return "stable";
    case GadgetType::tree_stable: return "tree-stable";
    case GadgetType::vertex: return "vertex";
  }
  return "unknown";
}

std::optional<GadgetType> gadget_type_from_string(const std::string& name) {
  for (auto t : {GadgetType::ck, GadgetType::two_block, GadgetType::three_block, GadgetType::simple_stable,
                 GadgetType::stable, GadgetType::tree_stable, GadgetType::vertex}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<VertexId> Gadget::internal_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : graph.vertices()) {
    bool terminal = std::any_of(ports.begin(), ports.end(), [&](const Port& p) {
      return p.kind == PortKind::terminal && p.members.front() == v;
    });
    if (!terminal) out.push_back(v);
  }
  return out;
}

bool Gadget::has_parallel_edges() const {
  std::vector<std::vector<VertexId>> sets;
  for (EdgeId e : graph.edges()) {
    auto members = graph.edge(e);
    sets.emplace_back(members.begin(), members.end());
    std::sort(sets.back().begin(), sets.back().end());
  }
  std::sort(sets.begin(), sets.end());
  return std::adjacent_find(sets.begin(), sets.end()) != sets.end();
}

bool Gadget::well_formed() const {
  if (graph.arity() != params.d || !graph.check_invariants()) return false;
  std::vector<VertexId> terminals;
  for (const Port& p : ports) {
    if (p.members.empty() || p.members.size() > params.d) return false;
    if (p.kind == PortKind::terminal && p.members.size() != 1) return false;
    for (VertexId v : p.members) {
      if (!graph.has_vertex(v) || std::find(dummies.begin(), dummies.end(), v) != dummies.end()) return false;
    }
    if (p.kind == PortKind::terminal) terminals.push_back(p.members.front());
  }
  for (EdgeId e : estar) {
    if (!graph.has_edge(e)) return false;
    for (VertexId v : graph.edge(e)) {
      if (std::find(terminals.begin(), terminals.end(), v) != terminals.end()) return false;
    }
  }
  return true;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

// Arity-agnostic layout used while composing gadgets; ids are local.
struct Fragment {
  struct SlotPort {
    std::string name;
    std::vector<std::uint32_t> members;
  };

  std::uint32_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> edges;
  std::vector<SlotPort> ports;
  std::vector<std::size_t> estar;
  std::optional<std::uint32_t> primary;
  unsigned depth = 0;

  std::uint32_t add_vertex() { return vertex_count++; }

  std::size_t add_edge(std::vector<std::uint32_t> members) {
    edges.push_back(std::move(members));
    return edges.size() - 1;
  }

  // Copies part in (vertices shifted); returns the vertex offset. Ports,
  // estar and primary of part are not carried over.
  std::uint32_t absorb(const Fragment& part) {
    const std::uint32_t offset = vertex_count;
    vertex_count += part.vertex_count;
    for (const auto& e : part.edges) {
      auto& copy = edges.emplace_back(e);
      for (auto& v : copy) v += offset;
    }
    return offset;
  }
};

std::uint32_t port_vertex(const Fragment& f, std::size_t port, std::uint32_t offset) {
  return f.ports.at(port).members.front() + offset;
}

Fragment two_block(unsigned k) {
  Fragment f;
  const auto h0 = f.add_vertex();
  const auto h1 = f.add_vertex();
  std::vector<std::uint32_t> clique;
  for (unsigned i = 0; i + 1 < k; ++i) clique.push_back(f.add_vertex());
  for (auto q : clique) f.add_edge({h0, q});
  for (auto q : clique) f.add_edge({h1, q});
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) f.add_edge({clique[i], clique[j]});
  }
  f.ports = {{"hub0", {h0}}, {"hub1", {h1}}};
  return f;
}

Fragment three_block(unsigned k) {
  Fragment f;
  if (k == 3) {
    const auto hub = f.add_vertex();
    f.ports = {{"hub0", {hub}}, {"hub1", {hub}}, {"hub2", {hub}}};
    return f;
  }
  std::vector<std::uint32_t> hubs{f.add_vertex(), f.add_vertex(), f.add_vertex()};
  f.ports = {{"hub0", {hubs[0]}}, {"hub1", {hubs[1]}}, {"hub2", {hubs[2]}}};
  if (k == 4) {
    // Hubs feed a = {a0,a1,a2}; a_i feeds x_i of a six-vertex core with
    // degrees x:3, y:4, z:5 internally, so every vertex sits at >= 4 and the
    // loss of any hub cascades through a, x, then y and z.
    std::vector<std::uint32_t> a{f.add_vertex(), f.add_vertex(), f.add_vertex()};
    std::vector<std::uint32_t> x{f.add_vertex(), f.add_vertex(), f.add_vertex()};
    const auto y0 = f.add_vertex();
    const auto y1 = f.add_vertex();
    const auto z = f.add_vertex();
    for (auto h : hubs) {
      for (auto ai : a) f.add_edge({h, ai});
    }
    for (int i = 0; i < 3; ++i) f.add_edge({a[i], x[i]});
    for (auto w : {x[0], x[1], x[2], y0, y1}) f.add_edge({z, w});
    f.add_edge({y0, y1});
    f.add_edge({x[0], x[1]});
    f.add_edge({y0, x[0]});
    f.add_edge({y0, x[2]});
    f.add_edge({y1, x[1]});
    f.add_edge({y1, x[2]});
    return f;
  }
  // k >= 5: Layer 0 hubs, Layer 1 of k-1, Layer 2 clique of k-3.
  std::vector<std::uint32_t> layer1, layer2;
  for (unsigned i = 0; i + 1 < k; ++i) layer1.push_back(f.add_vertex());
  for (unsigned i = 0; i + 3 < k; ++i) layer2.push_back(f.add_vertex());
  for (auto h : hubs) {
    for (auto l : layer1) f.add_edge({h, l});
  }
  for (auto l : layer1) {
    for (auto m : layer2) f.add_edge({l, m});
  }
  for (std::size_t i = 0; i < layer2.size(); ++i) {
    for (std::size_t j = i + 1; j < layer2.size(); ++j) f.add_edge({layer2[i], layer2[j]});
  }
  return f;
}

// Simple stable block with m central ports; with `up` the first chain block
// becomes a 3-block whose spare hub is exposed as a final "up" port.
Fragment simple_stable(unsigned m, unsigned k, bool up) {
  Fragment f;
  const auto central = f.add_vertex();
  f.primary = central;

  struct Placed {
    Fragment shape;
    std::uint32_t offset;
  };
  const unsigned count = k - 1;
  std::vector<Placed> blocks;
  for (unsigned i = 0; i < count; ++i) {
    const bool end = i == 0 || i + 1 == count;
    const bool three = !end || (i == 0 && up);
    Fragment shape = three ? three_block(k) : two_block(k);
    const auto offset = f.absorb(shape);
    blocks.push_back({std::move(shape), offset});
  }
  // Port roles per block: 0 -> central vertex, then prev, next, and for the
  // converted first block its remaining hub goes up.
  auto hub = [&](unsigned i, std::size_t role) { return port_vertex(blocks[i].shape, role, blocks[i].offset); };
  for (unsigned i = 0; i + 1 < count; ++i) {
    const std::size_t next_role = i == 0 ? 1 : 2;
    f.estar.push_back(f.add_edge({hub(i, next_role), hub(i + 1, 1)}));
  }
  for (unsigned i = 0; i < count; ++i) f.estar.push_back(f.add_edge({central, hub(i, 0)}));
  for (unsigned j = 0; j < m; ++j) f.ports.push_back({"n" + std::to_string(j), {central}});
  if (up) f.ports.push_back({"up", {hub(0, 2)}});
  return f;
}

std::size_t power(std::size_t base, unsigned exp) {
  std::size_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

Fragment stable_tree_node(std::size_t ports, unsigned k, unsigned levels_below, bool up) {
  if (levels_below == 0) return simple_stable(static_cast<unsigned>(ports), k, up);
  const std::size_t per_child = power(k - 1, levels_below);
  const auto children = static_cast<unsigned>((ports + per_child - 1) / per_child);
  Fragment f = simple_stable(children, k, up);
  std::vector<Fragment::SlotPort> leaf_ports;
  std::size_t remaining = ports;
  for (unsigned c = 0; c < children; ++c) {
    const std::size_t take = std::min(per_child, remaining);
    remaining -= take;
    Fragment child = stable_tree_node(take, k, levels_below - 1, true);
    const auto offset = f.absorb(child);
    // Child ports: its leaf ports, then "up" last.
    f.add_edge({f.ports[c].members.front(), port_vertex(child, child.ports.size() - 1, offset)});
    for (std::size_t p = 0; p + 1 < child.ports.size(); ++p) {
      auto port = child.ports[p];
      for (auto& v : port.members) v += offset;
      leaf_ports.push_back(std::move(port));
    }
  }
  std::vector<Fragment::SlotPort> ports_out = std::move(leaf_ports);
  if (up) ports_out.push_back(f.ports.back());
  f.ports = std::move(ports_out);
  for (std::size_t i = 0; i < f.ports.size(); ++i) {
    if (f.ports[i].name != "up") f.ports[i].name = "n" + std::to_string(i);
  }
  return f;
}

Fragment stable_tree(unsigned m, unsigned k) {
  if (m + 1 <= k) return simple_stable(m, k, false);
  unsigned levels = 0;
  while (power(k - 1, levels + 1) < m) ++levels;
  Fragment f = stable_tree_node(m, k, levels, false);
  f.depth = levels;
  return f;
}

// (d-1)-ary hyper-tree stable block for k = 2; edges are native d-ary.
Fragment hyper_tree(unsigned p, unsigned d) {
  Fragment f;
  unsigned levels = 1;
  while (power(d - 1, levels) < p) ++levels;
  f.depth = levels;
  const auto root = f.add_vertex();
  f.primary = root;
  std::vector<std::uint32_t> frontier{root};
  for (unsigned level = 0; level < levels; ++level) {
    std::vector<std::uint32_t> next;
    for (auto parent : frontier) {
      std::vector<std::uint32_t> members{parent};
      for (unsigned c = 0; c + 1 < d; ++c) members.push_back(f.add_vertex());
      next.insert(next.end(), members.begin() + 1, members.end());
      const auto e = f.add_edge(std::move(members));
      if (parent == root) f.estar.push_back(e);
    }
    frontier = std::move(next);
  }
  std::vector<std::uint32_t> ws;
  for (std::size_t g = 0; g < frontier.size(); g += d - 1) {
    std::vector<std::uint32_t> group;
    for (unsigned j = 0; j + 1 < d; ++j) group.push_back(f.add_vertex());
    for (std::size_t i = g; i < g + d - 1; ++i) {
      std::vector<std::uint32_t> members{frontier[i]};
      members.insert(members.end(), group.begin(), group.end());
      f.add_edge(std::move(members));
    }
    ws.insert(ws.end(), group.begin(), group.end());
  }
  for (unsigned i = 0; i < p; ++i) f.ports.push_back({"n" + std::to_string(i), {root, ws[i]}});
  return f;
}

Fragment vertex_gadget_k3(unsigned delta, unsigned k) {
  Fragment f;
  const auto primary = f.add_vertex();
  f.primary = primary;
  std::vector<std::uint32_t> block_offsets;
  const Fragment block = three_block(k);
  for (unsigned i = 0; i < delta; ++i) block_offsets.push_back(f.absorb(block));

  const Fragment stable = delta == 0 ? simple_stable(0, k, false) : stable_tree(delta, k);
  const auto edge_base = f.edges.size();
  const auto stable_offset = f.absorb(stable);
  for (auto e : stable.estar) f.estar.push_back(e + edge_base);
  f.depth = stable.depth;

  for (unsigned i = 0; i < delta; ++i) {
    f.add_edge({port_vertex(block, 0, block_offsets[i]), primary});
    f.add_edge({port_vertex(block, 1, block_offsets[i]), port_vertex(stable, i, stable_offset)});
    f.ports.push_back({"n" + std::to_string(i), {port_vertex(block, 2, block_offsets[i])}});
  }
  return f;
}

Fragment vertex_gadget_k2(unsigned delta, unsigned d) {
  Fragment f;
  const auto primary = f.add_vertex();
  f.primary = primary;
  const Fragment tree = hyper_tree(delta, d);
  const auto edge_base = f.edges.size();
  const auto tree_offset = f.absorb(tree);
  for (auto e : tree.estar) f.estar.push_back(e + edge_base);
  f.depth = tree.depth;
  for (unsigned i = 0; i < delta; ++i) {
    const auto t = f.add_vertex();
    std::vector<std::uint32_t> xs;
    for (unsigned q = 0; q + 2 < d; ++q) xs.push_back(f.add_vertex());
    std::vector<std::uint32_t> spoke{primary, t};
    spoke.insert(spoke.end(), xs.begin(), xs.end());
    f.add_edge(std::move(spoke));
    // The tree's neighboring edge (r, w_i) takes the same x_i as its filler.
    std::vector<std::uint32_t> closing;
    for (auto v : tree.ports[i].members) closing.push_back(v + tree_offset);
    closing.insert(closing.end(), xs.begin(), xs.end());
    f.add_edge(std::move(closing));
    f.ports.push_back({"n" + std::to_string(i), {t}});
  }
  return f;
}

// Materializes a fragment at arity d. Binary skeletons get d - 2 shared dummy
// vertices appended to every edge (none if the fragment has no edges).
Gadget finalize(const Fragment& f, GadgetParams params, std::vector<Port> terminal_ports = {}) {
  Gadget g;
  g.params = params;
  g.graph = Hypergraph(params.d);
  g.graph.add_vertices(f.vertex_count);
  const bool binary = std::all_of(f.edges.begin(), f.edges.end(), [](const auto& e) { return e.size() == 2; });
  if (binary && params.d > 2 && !f.edges.empty()) g.dummies = g.graph.add_vertices(params.d - 2);
  std::vector<VertexId> members;
  for (const auto& e : f.edges) {
    members.clear();
    for (auto v : e) members.emplace_back(v);
    if (binary) members.insert(members.end(), g.dummies.begin(), g.dummies.end());
    g.graph.add_edge(members);
  }
  g.ports = std::move(terminal_ports);
  for (const auto& p : f.ports) {
    Port port{p.name, PortKind::slot, {}};
    for (auto v : p.members) port.members.emplace_back(v);
    g.ports.push_back(std::move(port));
  }
  for (auto e : f.estar) g.estar.emplace_back(static_cast<std::uint32_t>(e));
  std::sort(g.estar.begin(), g.estar.end());
  if (f.primary) g.primary = VertexId(*f.primary);
  g.params.depth = f.depth;
  return g;
}

}  // namespace

Gadget build_ck_gadget(unsigned k, unsigned d) {
  require(k >= 2, "C_k needs k >= 2");
  require(d >= 2, "C_k needs d >= 2");
  Fragment f;
  const auto u = f.add_vertex();
  const auto v = f.add_vertex();
  std::vector<std::uint32_t> inner;
  for (unsigned i = 0; i < k; ++i) inner.push_back(f.add_vertex());
  for (auto w : inner) f.add_edge({u, w});
  for (auto w : inner) f.add_edge({v, w});
  // K_k on the inner vertices minus the edge {1, k}.
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = i + 1; j < k; ++j) {
      if (i == 0 && j + 1 == k) continue;
      f.add_edge({inner[i], inner[j]});
    }
  }
  std::vector<Port> terminals{{"u", PortKind::terminal, {VertexId(u)}}, {"v", PortKind::terminal, {VertexId(v)}}};
  return finalize(f, {GadgetType::ck, k, d, 0, 0}, std::move(terminals));
}

Gadget build_b_block(unsigned b, unsigned k, unsigned d) {
  require(b == 2 || b == 3, "only 2- and 3-blocks are supported");
  require(k >= 3, "b-blocks need k >= 3");
  require(d >= 2, "b-blocks need d >= 2");
  if (b == 2) return finalize(two_block(k), {GadgetType::two_block, k, d, 2, 0});
  return finalize(three_block(k), {GadgetType::three_block, k, d, 3, 0});
}

Gadget build_simple_stable_block(unsigned m, unsigned k, unsigned d) {
  require(k >= 3, "stable blocks need k >= 3");
  require(d >= 2, "stable blocks need d >= 2");
  require(m >= 1 && m + 1 <= k, "simple stable blocks need 1 <= m <= k-1");
  return finalize(simple_stable(m, k, false), {GadgetType::simple_stable, k, d, m, 0});
}

Gadget build_stable_block(unsigned m, unsigned k, unsigned d) {
  require(k >= 3, "stable blocks need k >= 3");
  require(d >= 2, "stable blocks need d >= 2");
  require(m >= 1, "stable blocks need m >= 1");
  return finalize(stable_tree(m, k), {GadgetType::stable, k, d, m, 0});
}

Gadget build_tree_stable_block(unsigned p, unsigned d) {
  require(d >= 3, "the hyper-tree stable block needs d >= 3 (k = d = 2 is the polynomial case)");
  require(p >= 1, "the hyper-tree stable block needs p >= 1");
  return finalize(hyper_tree(p, d), {GadgetType::tree_stable, 2, d, p, 0});
}

Gadget build_vertex_gadget(unsigned delta, unsigned k, unsigned d) {
  require(d >= 2, "vertex gadgets need d >= 2");
  if (k >= 3) return finalize(vertex_gadget_k3(delta, k), {GadgetType::vertex, k, d, delta, 0});
  require(k == 2 && d >= 3, "vertex gadgets need k >= 3, or k = 2 with d >= 3");
  return finalize(vertex_gadget_k2(delta, d), {GadgetType::vertex, k, d, delta, 0});
}

Gadget build_gadget(const GadgetParams& params) {
  switch (params.type) {
    case GadgetType::ck: return build_ck_gadget(params.k, params.d);
    case GadgetType::two_block: return build_b_block(2, params.k, params.d);
    case GadgetType::three_block: return build_b_block(3, params.k, params.d);
    case GadgetType::simple_stable: return build_simple_stable_block(params.degree, params.k, params.d);
    case GadgetType::stable: return build_stable_block(params.degree, params.k, params.d);
    case GadgetType::tree_stable:
      require(params.k == 2, "the hyper-tree stable block is the k = 2 construction");
      return build_tree_stable_block(params.degree, params.d);
    case GadgetType::vertex: return build_vertex_gadget(params.degree, params.k, params.d);
  }
  throw ParameterError("unknown gadget type");
}

Gadget negative_control(const Gadget& g) {
  Gadget out = g;
  const bool stable_like = g.params.type == GadgetType::simple_stable || g.params.type == GadgetType::stable ||
                           g.params.type == GadgetType::tree_stable || g.params.type == GadgetType::vertex;
  std::optional<EdgeId> victim;
  if (stable_like && !g.estar.empty()) {
    victim = g.estar.front();
  } else if (g.graph.num_edges() > 0) {
    victim = g.graph.edges().front();
  }
  if (victim) {
    out.graph.remove_edge(*victim);
    std::erase(out.estar, *victim);
  } else if (!out.ports.empty()) {
    out.ports.erase(out.ports.begin());
  }
  return out;
}

std::string serialize_gadget(const Gadget& g) {
  std::string body = serialize_hypergraph(g.graph);
  const auto header_end = body.find('\n') + 1;
  std::ostringstream notes;
  notes << "# gadget " << to_string(g.params.type) << " k=" << g.params.k << " d=" << g.params.d
        << " degree=" << g.params.degree << " depth=" << g.params.depth << '\n';
  for (const Port& p : g.ports) {
    notes << "# port " << p.name << ' ' << (p.kind == PortKind::terminal ? "terminal" : "slot");
    for (VertexId v : p.members) notes << ' ' << v.value;
    notes << '\n';
  }
  notes << "# estar";
  for (EdgeId e : g.estar) notes << ' ' << e.value;
  notes << '\n';
  if (!g.dummies.empty()) {
    notes << "# dummies";
    for (VertexId v : g.dummies) notes << ' ' << v.value;
    notes << '\n';
  }
  if (g.primary) notes << "# primary " << g.primary->value << '\n';
  return body.substr(0, header_end) + notes.str() + body.substr(header_end);
}

}  // namespace stashpeel
