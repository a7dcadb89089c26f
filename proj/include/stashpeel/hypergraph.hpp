#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stashpeel {

/// Opaque identifier. Ids are handed out in increasing order and never reused
/// within one hypergraph, so they stay valid as names across removals.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}
  constexpr auto operator<=>(const Id&) const = default;
};

using VertexId = Id<struct VertexTag>;
using EdgeId = Id<struct EdgeTag>;

class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition about a certificate does not hold,
/// e.g. a stash handed to a lifting routine does not actually peel the graph.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A d-uniform hypergraph with parallel edges allowed.
///
/// Each edge keeps the vertex order it was created with (used only for
/// serialization); degree and membership are set-based. The incidence index
/// is kept as the exact inverse of the edge table.
class Hypergraph {
 public:
  explicit Hypergraph(std::size_t arity);

  std::size_t arity() const { return arity_; }

  VertexId add_vertex();
  std::vector<VertexId> add_vertices(std::size_t count);
  /// Throws ParameterError on wrong arity or a repeated vertex,
  /// NotFoundError on a dead vertex.
  EdgeId add_edge(std::span<const VertexId> vertices);
  EdgeId add_edge(std::initializer_list<VertexId> vertices) {
    return add_edge(std::span<const VertexId>(vertices.begin(), vertices.size()));
  }

  /// Deletes v and every edge incident to it.
  void remove_vertex(VertexId v);
  void remove_edge(EdgeId e);

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;

  std::size_t degree(VertexId v) const;
  std::span<const VertexId> edge(EdgeId e) const;
  std::span<const EdgeId> incident(VertexId v) const;

  std::size_t num_vertices() const { return live_vertices_; }
  std::size_t num_edges() const { return live_edges_; }
  /// One past the largest vertex / edge id ever issued.
  std::size_t vertex_bound() const { return vertex_alive_.size(); }
  std::size_t edge_bound() const { return edges_.size(); }

  /// Live ids in ascending order.
  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  /// True when ids are exactly 0..n-1 and 0..m-1 (nothing was removed).
  bool is_canonical() const;

  /// Full rescan of the incidence index against the edge table.
  bool check_invariants() const;

 private:
  void require_vertex(VertexId v) const;
  void require_edge(EdgeId e) const;

  std::size_t arity_;
  std::vector<char> vertex_alive_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<VertexId>> edges_;  // empty vector marks a removed edge
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
};

/// Functional forms: copy, then remove.
Hypergraph without_vertex(const Hypergraph& h, VertexId v);
Hypergraph without_edge(const Hypergraph& h, EdgeId e);

/// Relabels live elements to 0..n-1 / 0..m-1, preserving relative order.
struct Compacted {
  Hypergraph graph;
  std::vector<VertexId> old_vertex;  // new id -> old id
  std::vector<EdgeId> old_edge;
};
Compacted compact(const Hypergraph& h);

std::vector<VertexId> to_vertex_ids(std::span<const std::uint32_t> raw);
std::vector<EdgeId> to_edge_ids(std::span<const std::uint32_t> raw);

}  // namespace stashpeel

template <class Tag>
struct std::hash<stashpeel::Id<Tag>> {
  std::size_t operator()(stashpeel::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
