#include "stashpeel/reductions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stashpeel/peeling.hpp"
#include "stashpeel/stash_solvers.hpp"
#include "stashpeel/text_format.hpp"

namespace stashpeel {

namespace {

void require_canonical(const Hypergraph& g) {
  if (!g.is_canonical()) throw ParameterError("reductions expect a canonical source (ids 0..n-1, 0..m-1)");
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Copies g into host; returns the host id of every gadget vertex (or the
// preassigned one where `fixed` has an entry) and of every gadget edge.
struct Placement {
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;
};

Placement place(Hypergraph& host, const Gadget& g, const std::map<std::uint32_t, VertexId>& fixed = {}) {
  Placement p;
  p.vertex.resize(g.graph.vertex_bound());
  for (VertexId v : g.graph.vertices()) {
    auto it = fixed.find(v.value);
    p.vertex[v.value] = it != fixed.end() ? it->second : host.add_vertex();
  }
  std::vector<VertexId> members;
  for (EdgeId e : g.graph.edges()) {
    members.clear();
    for (VertexId v : g.graph.edge(e)) members.push_back(p.vertex[v.value]);
    p.edge.push_back(host.add_edge(members));
  }
  return p;
}

}  // namespace

Reduction reduce_vc_to_vertex_stash(const Hypergraph& g, unsigned k, unsigned d) {
  if (g.arity() != 2) throw ArityError("vertex cover instances are standard graphs (d=2)");
  if (k < 2 || d < 2) throw ParameterError("the vertex cover reduction needs k >= 2 and d >= 2");
  require_canonical(g);
  Reduction r{Hypergraph(d), {}};
  auto& map = r.map;
  map.kind = ReductionKind::vertex_cover_to_vertex_stash;
  map.k = k;
  map.d = d;
  map.source_vertices = g.num_vertices();
  map.source_edges = g.num_edges();
  map.primary = r.graph.add_vertices(g.num_vertices());

  const Gadget ck = build_ck_gadget(k, d);
  for (EdgeId e : g.edges()) {
    const auto ends = g.edge(e);
    std::map<std::uint32_t, VertexId> fixed{{ck.ports[0].members.front().value, ends[0]},
                                            {ck.ports[1].members.front().value, ends[1]}};
    Placement p = place(r.graph, ck, fixed);
    map.edge_map.push_back(p.edge);
    std::vector<VertexId> inner;
    for (VertexId v : ck.internal_vertices()) inner.push_back(p.vertex[v.value]);
    map.edge_gadget_vertices.push_back(std::move(inner));
    map.source_edge_vertices.emplace_back(ends.begin(), ends.end());
  }
  return r;
}

std::vector<VertexId> map_vertex_stash(const ReductionMap& map, std::span<const VertexId> stash) {
  if (map.kind != ReductionKind::vertex_cover_to_vertex_stash) {
    throw ParameterError("vertex stashes are normalized through a vertex cover map");
  }
  std::map<VertexId, VertexId> target;
  for (std::size_t e = 0; e < map.edge_gadget_vertices.size(); ++e) {
    for (VertexId w : map.edge_gadget_vertices[e]) target[w] = map.source_edge_vertices[e].front();
  }
  std::vector<VertexId> out;
  for (VertexId w : stash) {
    if (w.value < map.source_vertices) {
      out.push_back(w);
    } else if (auto it = target.find(w); it != target.end()) {
      out.push_back(it->second);
    } else {
      throw NotFoundError("vertex " + std::to_string(w.value) + " is not part of the reduced instance");
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<VertexId> normalize_stash(const Hypergraph& reduced, const ReductionMap& map,
                                      std::span<const VertexId> stash) {
  if (!k_core_after(reduced, map.k, stash, {}).core_empty()) {
    throw ContractViolation("normalize_stash: input is not a k-vertex-stash of the reduced instance");
  }
  auto out = map_vertex_stash(map, stash);
  if (!k_core_after(reduced, map.k, out, {}).core_empty()) {
    throw ContractViolation("normalize_stash: normalized stash no longer peels the reduced instance");
  }
  return out;
}

Reduction reduce_vertex_to_edge_stash(const Hypergraph& g, unsigned k, unsigned d) {
  if (g.arity() != d) {
    throw ArityError("source arity " + std::to_string(g.arity()) + " does not match d=" + std::to_string(d));
  }
  if (k == 2 && d == 2) {
    throw UnsupportedCaseError(
        "k=2, d=2 edge stashing is polynomial (cyclomatic number via union-find); no reduction exists for it");
  }
  if (k < 2) throw ParameterError("the edge-stash reduction needs k >= 2");
  require_canonical(g);

  Reduction r{Hypergraph(d), {}};
  auto& map = r.map;
  map.kind = ReductionKind::vertex_stash_to_edge_stash;
  map.k = k;
  map.d = d;
  map.source_vertices = g.num_vertices();
  map.source_edges = g.num_edges();
  map.x_slot_reuse = k == 2;

  std::map<std::size_t, Gadget> cache;
  std::vector<std::vector<VertexId>> port_vertices(g.num_vertices());
  for (VertexId v : g.vertices()) {
    const std::size_t delta = g.degree(v);
    auto it = cache.find(delta);
    if (it == cache.end()) {
      it = cache.emplace(delta, build_vertex_gadget(static_cast<unsigned>(delta), k, d)).first;
    }
    const Gadget& gadget = it->second;
    Placement p = place(r.graph, gadget);
    map.primary.push_back(p.vertex[gadget.primary->value]);
    map.members.push_back(p.vertex);
    map.owned_edges.push_back(p.edge);
    std::vector<EdgeId> estar;
    for (EdgeId e : gadget.estar) estar.push_back(p.edge[e.value]);
    std::sort(estar.begin(), estar.end());
    map.estar_pick.push_back(estar.empty() ? std::nullopt : std::optional<EdgeId>(estar.front()));
    map.estar.push_back(std::move(estar));
    for (const Port& port : gadget.ports) port_vertices[v.value].push_back(p.vertex[port.members.front().value]);
  }

  std::vector<std::size_t> cursor(g.num_vertices(), 0);
  std::vector<VertexId> members;
  for (EdgeId e : g.edges()) {
    members.clear();
    const auto ends = g.edge(e);
    for (VertexId w : ends) members.push_back(port_vertices[w.value][cursor[w.value]++]);
    const EdgeId shared = r.graph.add_edge(members);
    map.edge_map.push_back({shared});
    map.owned_edges[std::min_element(ends.begin(), ends.end())->value].push_back(shared);
  }
  return r;
}

std::vector<VertexId> map_edge_stash(const ReductionMap& map, std::span<const EdgeId> stash) {
  if (map.kind != ReductionKind::vertex_stash_to_edge_stash) {
    throw ParameterError("edge stashes are lifted through a vertex-stash map");
  }
  std::map<EdgeId, VertexId> owner;
  for (std::uint32_t v = 0; v < map.owned_edges.size(); ++v) {
    for (EdgeId e : map.owned_edges[v]) owner[e] = VertexId(v);
  }
  std::vector<VertexId> out;
  for (EdgeId e : stash) {
    auto it = owner.find(e);
    if (it == owner.end()) throw NotFoundError("edge " + std::to_string(e.value) + " is not in the reduced instance");
    out.push_back(it->second);
  }
  return sorted_unique(std::move(out));
}

std::vector<VertexId> lift_edge_stash(const Hypergraph& reduced, const ReductionMap& map,
                                      std::span<const EdgeId> stash) {
  if (!k_core_after(reduced, map.k, {}, stash).core_empty()) {
    throw ContractViolation("lift_edge_stash: input is not a k-edge-stash of the reduced instance");
  }
  return map_edge_stash(map, stash);
}

std::vector<EdgeId> push_vertex_stash(const Hypergraph& source, const ReductionMap& map,
                                      std::span<const VertexId> stash) {
  if (map.kind != ReductionKind::vertex_stash_to_edge_stash) {
    throw ParameterError("vertex stashes are pushed through a vertex-stash map");
  }
  if (!k_core_after(source, map.k, stash, {}).core_empty()) {
    throw ContractViolation("push_vertex_stash: input is not a k-vertex-stash of the source instance");
  }
  std::vector<EdgeId> out;
  for (VertexId v : stash) {
    if (v.value >= map.estar_pick.size() || !map.estar_pick[v.value]) {
      throw NotFoundError("no estar edge recorded for vertex " + std::to_string(v.value));
    }
    out.push_back(*map.estar_pick[v.value]);
  }
  return sorted_unique(std::move(out));
}

CheckResult audit_p1(const Hypergraph& source, const Hypergraph& reduced, const ReductionMap& map) {
  std::vector<std::int64_t> gadget_of(reduced.vertex_bound(), -1);
  for (std::size_t v = 0; v < map.members.size(); ++v) {
    for (VertexId w : map.members[v]) gadget_of[w.value] = static_cast<std::int64_t>(v);
  }
  std::vector<std::size_t> leaving(map.members.size(), 0);
  for (EdgeId e : reduced.edges()) {
    std::vector<std::int64_t> owners;
    for (VertexId w : reduced.edge(e)) owners.push_back(gadget_of[w.value]);
    owners = sorted_unique(std::move(owners));
    if (owners.front() < 0) return {"P1", false, "edge " + std::to_string(e.value) + " touches an unowned vertex"};
    if (owners.size() > 1) {
      for (auto o : owners) ++leaving[o];
    }
  }
  for (VertexId v : source.vertices()) {
    if (leaving[v.value] != source.degree(v)) {
      return {"P1", false, "vertex " + std::to_string(v.value) + ": " + std::to_string(leaving[v.value]) +
                               " neighboring edges, degree " + std::to_string(source.degree(v))};
    }
  }
  for (EdgeId e : source.edges()) {
    std::vector<std::int64_t> expected;
    for (VertexId w : source.edge(e)) expected.push_back(w.value);
    std::vector<std::int64_t> got;
    for (VertexId w : reduced.edge(map.edge_map[e.value].front())) got.push_back(gadget_of[w.value]);
    if (sorted_unique(expected) != sorted_unique(got)) {
      return {"P1", false, "source edge " + std::to_string(e.value) + " is not wired to its endpoint gadgets"};
    }
  }
  return {"P1", true, ""};
}

namespace {

template <class Ids>
void write_ids(std::ostringstream& out, const Ids& ids) {
  for (const auto& id : ids) out << ' ' << id.value;
}

template <class IdT>
std::vector<IdT> read_ids(const std::vector<std::string_view>& words, std::size_t from, std::size_t line) {
  std::vector<IdT> out;
  for (std::size_t i = from; i < words.size(); ++i) out.emplace_back(parse_count(words[i], line));
  return out;
}

}  // namespace

std::string serialize_map(const ReductionMap& map) {
  std::ostringstream out;
  const bool vc = map.kind == ReductionKind::vertex_cover_to_vertex_stash;
  out << "R " << (vc ? "vc" : "vstash") << ' ' << map.k << ' ' << map.d << ' ' << map.source_vertices << ' '
      << map.source_edges << '\n';
  if (map.x_slot_reuse) out << "F xslot-reuse\n";
  for (std::size_t v = 0; v < map.primary.size(); ++v) {
    out << "M v " << v << ' ' << map.primary[v].value << ' ';
    if (!vc && map.estar_pick[v]) {
      out << map.estar_pick[v]->value;
    } else {
      out << '-';
    }
    out << '\n';
  }
  for (std::size_t e = 0; e < map.edge_gadget_vertices.size(); ++e) {
    out << "C " << e;
    write_ids(out, map.source_edge_vertices[e]);
    write_ids(out, map.edge_gadget_vertices[e]);
    out << '\n';
  }
  for (std::size_t v = 0; v < map.members.size(); ++v) {
    out << "P " << v;
    write_ids(out, map.members[v]);
    out << "\nO " << v;
    write_ids(out, map.owned_edges[v]);
    out << "\nX " << v;
    write_ids(out, map.estar[v]);
    out << '\n';
  }
  for (std::size_t e = 0; e < map.edge_map.size(); ++e) {
    out << "N " << e;
    write_ids(out, map.edge_map[e]);
    out << '\n';
  }
  return out.str();
}

ReductionMap parse_map(std::string_view text) {
  ReductionMap map;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t vertex_lines = 0;
  std::size_t pos = 0;
  auto slot = [](auto& vec, std::size_t index, std::size_t limit, std::size_t line) -> auto& {
    if (index >= limit) throw ParseError(line, "index " + std::to_string(index) + " out of range");
    if (vec.size() < limit) vec.resize(limit);
    return vec[index];
  };
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto words = split_words(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (words.empty() || words.front().starts_with('#')) continue;
    const auto tag = words.front();
    if (!have_header) {
      if (tag != "R" || words.size() != 6 || (words[1] != "vc" && words[1] != "vstash")) {
        throw ParseError(line_no, "malformed map header, expected 'R vc|vstash <k> <d> <n> <m>'");
      }
      map.kind = words[1] == "vc" ? ReductionKind::vertex_cover_to_vertex_stash
                                  : ReductionKind::vertex_stash_to_edge_stash;
      map.k = parse_count(words[2], line_no);
      map.d = parse_count(words[3], line_no);
      map.source_vertices = parse_count(words[4], line_no);
      map.source_edges = parse_count(words[5], line_no);
      have_header = true;
      continue;
    }
    const bool vc = map.kind == ReductionKind::vertex_cover_to_vertex_stash;
    if (tag == "F" && words.size() == 2 && words[1] == "xslot-reuse") {
      map.x_slot_reuse = true;
    } else if (tag == "M" && words.size() == 5 && words[1] == "v") {
      const auto v = parse_count(words[2], line_no);
      ++vertex_lines;
      slot(map.primary, v, map.source_vertices, line_no) = VertexId(parse_count(words[3], line_no));
      if (!vc) {
        slot(map.estar_pick, v, map.source_vertices, line_no) =
            words[4] == "-" ? std::nullopt : std::optional<EdgeId>(EdgeId(parse_count(words[4], line_no)));
      }
    } else if (tag == "C" && words.size() >= 4 && vc) {
      const auto e = parse_count(words[1], line_no);
      auto ids = read_ids<VertexId>(words, 2, line_no);
      slot(map.source_edge_vertices, e, map.source_edges, line_no) = {ids[0], ids[1]};
      slot(map.edge_gadget_vertices, e, map.source_edges, line_no) = {ids.begin() + 2, ids.end()};
    } else if ((tag == "P" || tag == "O" || tag == "X") && words.size() >= 2 && !vc) {
      const auto v = parse_count(words[1], line_no);
      if (tag == "P") slot(map.members, v, map.source_vertices, line_no) = read_ids<VertexId>(words, 2, line_no);
      if (tag == "O") slot(map.owned_edges, v, map.source_vertices, line_no) = read_ids<EdgeId>(words, 2, line_no);
      if (tag == "X") slot(map.estar, v, map.source_vertices, line_no) = read_ids<EdgeId>(words, 2, line_no);
    } else if (tag == "N" && words.size() >= 2) {
      const auto e = parse_count(words[1], line_no);
      slot(map.edge_map, e, map.source_edges, line_no) = read_ids<EdgeId>(words, 2, line_no);
    } else {
      throw ParseError(line_no, "unrecognized map line");
    }
  }
  if (!have_header) throw ParseError(1, "missing map header");
  if (vertex_lines != map.source_vertices) throw ParseError(line_no, "map is missing 'M v' lines");
  return map;
}

}  // namespace stashpeel
