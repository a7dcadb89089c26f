#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stashpeel/hypergraph.hpp"

namespace stashpeel {

enum class StashMode { vertex, edge };

/// Raised by the standard-graph-only routines when d != 2.
class ArityError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

struct StashResult {
  StashMode kind = StashMode::vertex;
  std::vector<std::uint32_t> stash;  // raw ids, ascending
  bool optimal = false;
  bool residual_core_empty = false;

  std::size_t size() const { return stash.size(); }
  std::vector<VertexId> vertex_ids() const;
  std::vector<EdgeId> edge_ids() const;
};

/// Structure behind the minimum 2-edge-stash of a standard graph.
/// h = |E| - |V| + components; removed_edges are the cycle-closing edges.
struct CyclomaticCertificate {
  std::size_t h = 0;
  std::size_t components = 0;
  std::vector<EdgeId> removed_edges;
};

inline constexpr std::size_t kDefaultSizeCap = 6;

/// True when removing `ids` (vertices or edges per mode) leaves h k-peelable.
bool is_valid_stash(const Hypergraph& h, unsigned k, StashMode mode, std::span<const std::uint32_t> ids);

/// Smallest stash by cardinality-increasing search over core elements only.
/// Independent core components are solved separately, and failed residual
/// cores are memoized per remaining budget. Returns nullopt when every stash
/// needs more than size_cap elements.
std::optional<StashResult> min_stash_exact(const Hypergraph& h, unsigned k, StashMode mode,
                                           std::size_t size_cap = kDefaultSizeCap);

inline std::optional<StashResult> min_vertex_stash_exact(const Hypergraph& h, unsigned k,
                                                         std::size_t size_cap = kDefaultSizeCap) {
  return min_stash_exact(h, k, StashMode::vertex, size_cap);
}

inline std::optional<StashResult> min_edge_stash_exact(const Hypergraph& h, unsigned k,
                                                       std::size_t size_cap = kDefaultSizeCap) {
  return min_stash_exact(h, k, StashMode::edge, size_cap);
}

/// Insert edges one at a time (ascending id unless an order is given) and set
/// aside every edge whose endpoints are already connected. Throws ArityError
/// unless d == 2.
CyclomaticCertificate two_edge_stash_standard(const Hypergraph& g, std::span<const EdgeId> insertion_order = {});

/// Minimum vertex cover by bounded branching on an uncovered edge.
std::optional<std::vector<VertexId>> min_vertex_cover_exact(const Hypergraph& g,
                                                            std::size_t size_cap = kDefaultSizeCap);

enum class TieBreak { max_degree, min_id, seeded_random };

/// Stash one core element at a time until the core is empty. max_degree scores
/// a vertex by its core degree and an edge by the summed core degree of its
/// vertices; ties go to the lowest id.
StashResult greedy_stash(const Hypergraph& h, unsigned k, StashMode mode, TieBreak tie_break = TieBreak::max_degree,
                         std::uint64_t seed = 0);

}  // namespace stashpeel
