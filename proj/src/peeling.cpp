#include "stashpeel/peeling.hpp"

#include <algorithm>
#include <string>

#include "stashpeel/random.hpp"

namespace stashpeel {

namespace {

void require_k(unsigned k) {
  if (k == 0) throw ParameterError("peeling threshold k must be at least 1");
}

PeelTrace peel(const Hypergraph& h, unsigned k, std::vector<char> vertex_live, std::vector<char> edge_live,
               const PeelOptions& options) {
  PeelTrace trace;
  trace.k = k;
  std::vector<std::uint32_t> degree(h.vertex_bound(), 0);
  for (EdgeId e : h.edges()) {
    if (!edge_live[e.value]) continue;
    for (VertexId v : h.edge(e)) ++degree[v.value];
  }

  std::vector<std::uint32_t> worklist;
  for (VertexId v : h.vertices()) {
    if (vertex_live[v.value] && degree[v.value] < k) worklist.push_back(v.value);
  }
  std::optional<Rng> rng;
  if (options.seed) rng.emplace(*options.seed);
  std::size_t head = 0;  // FIFO cursor for the deterministic order

  std::vector<char> queued(h.vertex_bound(), 0);
  for (auto v : worklist) queued[v] = 1;

  while (head < worklist.size()) {
    std::uint32_t v;
    if (rng) {
      std::size_t pick = head + rng->below(worklist.size() - head);
      std::swap(worklist[head], worklist[pick]);
    }
    v = worklist[head++];
    vertex_live[v] = 0;
    trace.peeled_vertices.emplace_back(v);
    for (EdgeId e : h.incident(VertexId(v))) {
      if (!edge_live[e.value]) continue;
      edge_live[e.value] = 0;
      trace.peeled_edges.push_back(e);
      for (VertexId w : h.edge(e)) {
        if (w.value == v) continue;
        if (--degree[w.value] < k && vertex_live[w.value] && !queued[w.value]) {
          queued[w.value] = 1;
          worklist.push_back(w.value);
        }
      }
    }
  }
  std::sort(trace.peeled_edges.begin(), trace.peeled_edges.end());
  for (VertexId v : h.vertices()) {
    if (vertex_live[v.value]) trace.core_vertices.push_back(v);
  }
  for (EdgeId e : h.edges()) {
    if (edge_live[e.value]) trace.core_edges.push_back(e);
  }
  return trace;
}

std::vector<char> vertex_mask(const Hypergraph& h) {
  std::vector<char> mask(h.vertex_bound(), 0);
  for (VertexId v : h.vertices()) mask[v.value] = 1;
  return mask;
}

std::vector<char> edge_mask(const Hypergraph& h) {
  std::vector<char> mask(h.edge_bound(), 0);
  for (EdgeId e : h.edges()) mask[e.value] = 1;
  return mask;
}

}  // namespace

PeelTrace k_core(const Hypergraph& h, unsigned k, PeelOptions options) {
  require_k(k);
  return peel(h, k, vertex_mask(h), edge_mask(h), options);
}

bool is_k_peelable(const Hypergraph& h, unsigned k) { return k_core(h, k).core_empty(); }

PeelTrace k_core_after(const Hypergraph& h, unsigned k, std::span<const VertexId> stash_vertices,
                       std::span<const EdgeId> stash_edges, PeelOptions options) {
  require_k(k);
  auto vlive = vertex_mask(h);
  auto elive = edge_mask(h);
  for (EdgeId e : stash_edges) {
    if (!h.has_edge(e)) throw NotFoundError("unknown edge id " + std::to_string(e.value));
    elive[e.value] = 0;
  }
  for (VertexId v : stash_vertices) {
    if (!h.has_vertex(v)) throw NotFoundError("unknown vertex id " + std::to_string(v.value));
    vlive[v.value] = 0;
    for (EdgeId e : h.incident(v)) elive[e.value] = 0;
  }
  return peel(h, k, std::move(vlive), std::move(elive), options);
}

bool audit_trace(const Hypergraph& h, const PeelTrace& trace, std::span<const VertexId> stash_vertices,
                 std::span<const EdgeId> stash_edges) {
  Hypergraph g = h;
  for (EdgeId e : stash_edges) {
    if (g.has_edge(e)) g.remove_edge(e);
  }
  for (VertexId v : stash_vertices) {
    if (g.has_vertex(v)) g.remove_vertex(v);
  }
  const auto initial_edges = g.edges();
  const auto initial_vertices = g.vertices();
  for (VertexId v : trace.peeled_vertices) {
    if (!g.has_vertex(v) || g.degree(v) >= trace.k) return false;
    g.remove_vertex(v);
  }
  if (g.vertices() != trace.core_vertices || g.edges() != trace.core_edges) return false;
  for (VertexId v : trace.core_vertices) {
    if (g.degree(v) < trace.k) return false;
  }
  // Peeled edges are exactly the initial edges that did not survive.
  std::vector<EdgeId> expected_peeled;
  std::set_difference(initial_edges.begin(), initial_edges.end(), trace.core_edges.begin(),
                      trace.core_edges.end(), std::back_inserter(expected_peeled));
  return expected_peeled == trace.peeled_edges &&
         trace.peeled_vertices.size() + trace.core_vertices.size() == initial_vertices.size();
}

CoreKernel::CoreKernel(const Hypergraph& h, unsigned k)
    : k_(k), edge_vertices_(h.edge_bound()), vertex_edges_(h.vertex_bound()), degree_(h.vertex_bound()) {
  require_k(k);
  for (EdgeId e : h.edges()) {
    for (VertexId v : h.edge(e)) {
      edge_vertices_[e.value].push_back(v.value);
      vertex_edges_[v.value].push_back(e.value);
    }
  }
  queue_.reserve(h.vertex_bound());
}

std::size_t CoreKernel::restrict_to_core(std::vector<char>& vertex_live, std::vector<char>& edge_live) {
  const std::size_t nv = vertex_edges_.size();
  std::fill(degree_.begin(), degree_.end(), 0U);
  for (std::size_t e = 0; e < edge_vertices_.size(); ++e) {
    if (!edge_live[e]) continue;
    const auto& members = edge_vertices_[e];
    bool ok = !members.empty();
    for (auto v : members) ok = ok && vertex_live[v];
    if (!ok) {
      edge_live[e] = 0;
      continue;
    }
    for (auto v : members) ++degree_[v];
  }
  queue_.clear();
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (vertex_live[v] && degree_[v] < k_) {
      vertex_live[v] = 0;
      queue_.push_back(v);
    }
  }
  // vertex_live is cleared on enqueue, so each vertex enters the queue once.
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    for (auto e : vertex_edges_[queue_[head]]) {
      if (!edge_live[e]) continue;
      edge_live[e] = 0;
      for (auto w : edge_vertices_[e]) {
        if (vertex_live[w] && --degree_[w] < k_) {
          vertex_live[w] = 0;
          queue_.push_back(w);
        }
      }
    }
  }
  std::size_t core = 0;
  for (std::uint32_t v = 0; v < nv; ++v) core += vertex_live[v] ? 1 : 0;
  return core;
}

}  // namespace stashpeel
