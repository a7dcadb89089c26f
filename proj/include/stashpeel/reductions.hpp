#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stashpeel/gadget_checks.hpp"
#include "stashpeel/hypergraph.hpp"

namespace stashpeel {

/// Thrown for the one parameter combination with no reduction: k = d = 2
/// edge stashing, which the cyclomatic algorithm solves exactly.
class UnsupportedCaseError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

enum class ReductionKind {
  vertex_cover_to_vertex_stash,
  vertex_stash_to_edge_stash,
};

/// Correspondence between a source instance and its reduced instance.
/// Per-source-vertex vectors are indexed by source vertex id, per-source-edge
/// vectors by source edge id.
struct ReductionMap {
  ReductionKind kind = ReductionKind::vertex_cover_to_vertex_stash;
  unsigned k = 0;
  unsigned d = 0;
  std::size_t source_vertices = 0;
  std::size_t source_edges = 0;

  std::vector<VertexId> primary;                 // the vertex standing in for each source vertex
  std::vector<std::vector<EdgeId>> edge_map;     // source edge -> reduced edges

  // Vertex cover direction: C_k internals and the (u, v) each gadget replaced.
  std::vector<std::vector<VertexId>> edge_gadget_vertices;
  std::vector<std::vector<VertexId>> source_edge_vertices;

  // Edge-stash direction.
  std::vector<std::vector<VertexId>> members;     // vertices of P_k(v)
  std::vector<std::vector<EdgeId>> owned_edges;   // internal edges + neighboring edges owned by v
  std::vector<std::vector<EdgeId>> estar;
  std::vector<std::optional<EdgeId>> estar_pick;  // lowest estar id
  bool x_slot_reuse = false;  // k = 2: tree port edges reuse the x dummies of the spoke edges

  bool operator==(const ReductionMap&) const = default;
};

struct Reduction {
  Hypergraph graph{2};
  ReductionMap map;
};

/// Replaces every edge (u, v) of a standard graph by a fresh C_k(u, v). Source
/// vertices keep their ids (the source must be canonical).
Reduction reduce_vc_to_vertex_stash(const Hypergraph& g, unsigned k, unsigned d);

/// Moves every gadget-internal stash vertex onto its gadget's u. The input
/// must be a valid k-vertex-stash of `reduced` (ContractViolation otherwise).
std::vector<VertexId> normalize_stash(const Hypergraph& reduced, const ReductionMap& map,
                                      std::span<const VertexId> stash);

/// Replaces every vertex v by P_k(v) and each source edge by one neighboring
/// edge through one port of each endpoint gadget. d must equal g.arity().
Reduction reduce_vertex_to_edge_stash(const Hypergraph& g, unsigned k, unsigned d);

/// Maps each stashed edge to the source vertex owning it (a shared edge
/// belongs to its lowest-id endpoint). The stash must peel `reduced`.
std::vector<VertexId> lift_edge_stash(const Hypergraph& reduced, const ReductionMap& map,
                                      std::span<const EdgeId> stash);

/// {estar_pick(v) : v in stash}. The stash must peel `source`.
std::vector<EdgeId> push_vertex_stash(const Hypergraph& source, const ReductionMap& map,
                                      std::span<const VertexId> stash);

/// Pure id mappings behind normalize/lift, without validity checks.
std::vector<VertexId> map_vertex_stash(const ReductionMap& map, std::span<const VertexId> stash);
std::vector<VertexId> map_edge_stash(const ReductionMap& map, std::span<const EdgeId> stash);

/// P1 inside the reduced instance: for every source vertex the number of
/// edges leaving P_k(v) equals deg(v), and each leaving edge meets exactly the
/// gadgets of its source edge's endpoints.
CheckResult audit_p1(const Hypergraph& source, const Hypergraph& reduced, const ReductionMap& map);

/// Text sidecar:
///   R vc|vstash <k> <d> <source_vertices> <source_edges>
///   F xslot-reuse
///   M v <orig> <primary-id> <estar-edge-id|->
///   C <source-edge> <u> <v> <gadget vertices...>
///   P <orig> <gadget vertices...>
///   O <orig> <owned edges...>
///   X <orig> <estar edges...>
///   N <source-edge> <reduced edges...>
std::string serialize_map(const ReductionMap& map);
ReductionMap parse_map(std::string_view text);

}  // namespace stashpeel
