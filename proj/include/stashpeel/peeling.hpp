#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stashpeel/hypergraph.hpp"

namespace stashpeel {

/// Log of one peel. Core and peeled sets partition the (post-stash) input.
struct PeelTrace {
  unsigned k = 0;
  std::vector<VertexId> peeled_vertices;  // in removal order
  std::vector<EdgeId> peeled_edges;       // ascending
  std::vector<VertexId> core_vertices;    // ascending
  std::vector<EdgeId> core_edges;         // ascending

  bool core_empty() const { return core_vertices.empty(); }
};

struct PeelOptions {
  /// Unset: worklist seeded with all low-degree vertices in ascending id
  /// order, then FIFO. Set: every pop takes a uniformly random worklist entry.
  std::optional<std::uint64_t> seed;
};

/// k-core by worklist peeling, linear in the total incidence size.
/// Throws ParameterError for k == 0.
PeelTrace k_core(const Hypergraph& h, unsigned k, PeelOptions options = {});

bool is_k_peelable(const Hypergraph& h, unsigned k);

/// k-core of h with the stash removed first; h is not modified. Unknown ids
/// throw NotFoundError.
PeelTrace k_core_after(const Hypergraph& h, unsigned k, std::span<const VertexId> stash_vertices,
                       std::span<const EdgeId> stash_edges, PeelOptions options = {});

/// Replays the peel order against h minus the stash and confirms every
/// recorded vertex had degree < k when it was removed, that the remaining
/// core has minimum degree >= k, and that the sets partition the input.
bool audit_trace(const Hypergraph& h, const PeelTrace& trace, std::span<const VertexId> stash_vertices = {},
                 std::span<const EdgeId> stash_edges = {});

/// Allocation-light core computation over raw-id masks, for search code that
/// evaluates many removal sets on one graph. Not thread-safe (owns scratch).
class CoreKernel {
 public:
  CoreKernel(const Hypergraph& h, unsigned k);

  unsigned k() const { return k_; }
  std::size_t vertex_bound() const { return vertex_edges_.size(); }
  std::size_t edge_bound() const { return edge_vertices_.size(); }

  std::span<const std::uint32_t> edge_vertices(std::uint32_t e) const { return edge_vertices_[e]; }
  std::span<const std::uint32_t> vertex_edges(std::uint32_t v) const { return vertex_edges_[v]; }

  /// On entry the masks mark the live subgraph (an edge counts only if it and
  /// all its vertices are live). On exit they mark its k-core. Returns the
  /// number of core vertices.
  std::size_t restrict_to_core(std::vector<char>& vertex_live, std::vector<char>& edge_live);

 private:
  unsigned k_;
  std::vector<std::vector<std::uint32_t>> edge_vertices_;
  std::vector<std::vector<std::uint32_t>> vertex_edges_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace stashpeel
