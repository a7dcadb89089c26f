#include "stashpeel/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace stashpeel {

Hypergraph::Hypergraph(std::size_t arity) : arity_(arity) {
  if (arity < 2) {
    throw ParameterError("hypergraph arity must be at least 2, got " + std::to_string(arity));
  }
}

VertexId Hypergraph::add_vertex() {
  VertexId v(static_cast<std::uint32_t>(vertex_alive_.size()));
  vertex_alive_.push_back(1);
  incidence_.emplace_back();
  ++live_vertices_;
  return v;
}

std::vector<VertexId> Hypergraph::add_vertices(std::size_t count) {
  std::vector<VertexId> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(add_vertex());
  return out;
}

EdgeId Hypergraph::add_edge(std::span<const VertexId> vertices) {
  if (vertices.size() != arity_) {
    throw ParameterError("edge has " + std::to_string(vertices.size()) + " vertices, expected " +
                         std::to_string(arity_));
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require_vertex(vertices[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[j] == vertices[i]) {
        throw ParameterError("vertex " + std::to_string(vertices[i].value) +
                             " repeated within an edge");
      }
    }
  }
  EdgeId e(static_cast<std::uint32_t>(edges_.size()));
  edges_.emplace_back(vertices.begin(), vertices.end());
  for (VertexId v : vertices) incidence_[v.value].push_back(e);
  ++live_edges_;
  return e;
}

void Hypergraph::remove_edge(EdgeId e) {
  require_edge(e);
  for (VertexId v : edges_[e.value]) {
    auto& inc = incidence_[v.value];
    inc.erase(std::find(inc.begin(), inc.end(), e));
  }
  edges_[e.value].clear();
  --live_edges_;
}

void Hypergraph::remove_vertex(VertexId v) {
  require_vertex(v);
  while (!incidence_[v.value].empty()) remove_edge(incidence_[v.value].back());
  vertex_alive_[v.value] = 0;
  --live_vertices_;
}

bool Hypergraph::has_vertex(VertexId v) const {
  return v.value < vertex_alive_.size() && vertex_alive_[v.value];
}

bool Hypergraph::has_edge(EdgeId e) const {
  return e.value < edges_.size() && !edges_[e.value].empty();
}

std::size_t Hypergraph::degree(VertexId v) const {
  require_vertex(v);
  return incidence_[v.value].size();
}

std::span<const VertexId> Hypergraph::edge(EdgeId e) const {
  require_edge(e);
  return edges_[e.value];
}

std::span<const EdgeId> Hypergraph::incident(VertexId v) const {
  require_vertex(v);
  return incidence_[v.value];
}

std::vector<VertexId> Hypergraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_vertices_);
  for (std::uint32_t i = 0; i < vertex_alive_.size(); ++i) {
    if (vertex_alive_[i]) out.emplace_back(i);
  }
  return out;
}

std::vector<EdgeId> Hypergraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    if (!edges_[i].empty()) out.emplace_back(i);
  }
  return out;
}

bool Hypergraph::is_canonical() const {
  return live_vertices_ == vertex_alive_.size() && live_edges_ == edges_.size();
}

bool Hypergraph::check_invariants() const {
  std::vector<std::vector<EdgeId>> rebuilt(incidence_.size());
  std::size_t edge_count = 0;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& members = edges_[i];
    if (members.empty()) continue;
    ++edge_count;
    if (members.size() != arity_) return false;
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (!has_vertex(members[a])) return false;
      for (std::size_t b = 0; b < a; ++b) {
        if (members[a] == members[b]) return false;
      }
      rebuilt[members[a].value].emplace_back(i);
    }
  }
  if (edge_count != live_edges_) return false;
  std::size_t vertex_count = 0;
  for (std::size_t v = 0; v < incidence_.size(); ++v) {
    if (vertex_alive_[v]) ++vertex_count;
    if (!vertex_alive_[v] && !incidence_[v].empty()) return false;
    auto have = incidence_[v];
    std::sort(have.begin(), have.end());
    if (have != rebuilt[v]) return false;
  }
  return vertex_count == live_vertices_;
}

void Hypergraph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw NotFoundError("unknown vertex id " + std::to_string(v.value));
}

void Hypergraph::require_edge(EdgeId e) const {
  if (!has_edge(e)) throw NotFoundError("unknown edge id " + std::to_string(e.value));
}

Hypergraph without_vertex(const Hypergraph& h, VertexId v) {
  Hypergraph copy = h;
  copy.remove_vertex(v);
  return copy;
}

Hypergraph without_edge(const Hypergraph& h, EdgeId e) {
  Hypergraph copy = h;
  copy.remove_edge(e);
  return copy;
}

Compacted compact(const Hypergraph& h) {
  Compacted out{Hypergraph(h.arity()), h.vertices(), h.edges()};
  std::vector<VertexId> renamed(h.vertex_bound());
  for (VertexId old : out.old_vertex) renamed[old.value] = out.graph.add_vertex();
  std::vector<VertexId> members;
  for (EdgeId old : out.old_edge) {
    members.clear();
    for (VertexId v : h.edge(old)) members.push_back(renamed[v.value]);
    out.graph.add_edge(members);
  }
  return out;
}

std::vector<VertexId> to_vertex_ids(std::span<const std::uint32_t> raw) {
  std::vector<VertexId> out;
  out.reserve(raw.size());
  for (auto r : raw) out.emplace_back(r);
  return out;
}

std::vector<EdgeId> to_edge_ids(std::span<const std::uint32_t> raw) {
  std::vector<EdgeId> out;
  out.reserve(raw.size());
  for (auto r : raw) out.emplace_back(r);
  return out;
}

}  // namespace stashpeel
