#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stashpeel/gadgets.hpp"

namespace stashpeel {

struct CheckResult {
  std::string property;
  bool pass = false;
  std::string witness;  // non-empty on failure: the removal set or stash that broke the property
};

struct GadgetReport {
  GadgetParams params;
  bool parallel_edges = false;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// "type k=.. d=.. degree=.." as used in the TSV report.
  std::string label() const;
};

/// The gadget placed in a test harness where every port is capped by an
/// anchor: a cluster of d fresh vertices joined by k parallel edges, so the
/// anchor stays in the core and its port edge counts toward the gadget's
/// degrees. Terminal ports get the cluster attached to the terminal itself.
struct Harness {
  Hypergraph graph{2};
  unsigned k = 0;
  std::vector<VertexId> internal;
  std::vector<EdgeId> port_edge;      // slot ports: the neighboring edge
  std::vector<VertexId> port_vertex;  // terminal ports: the terminal
  std::vector<PortKind> port_kind;
};

Harness embed_with_anchors(const Gadget& g);

/// Outcome of peeling the harness with the flagged ports removed and
/// optionally one internal edge stashed.
struct PeelOutcome {
  std::size_t internal_survivors = 0;
  bool primary_survives = false;
  std::vector<VertexId> survivors;
};
PeelOutcome peel_harness(const Gadget& g, const Harness& harness, const std::vector<char>& removed,
                         std::optional<EdgeId> stashed = std::nullopt);

/// Exhaustive up to this many ports; sampled above.
inline constexpr std::size_t kExhaustiveStablePorts = 10;
inline constexpr std::size_t kExhaustiveVertexPorts = 5;

GadgetReport check_ck_properties(const Gadget& g);
GadgetReport check_b_block(const Gadget& g);
GadgetReport check_stable_block(const Gadget& g, unsigned k);
/// P1-P3 of a vertex gadget in isolation: port count equals delta, the
/// gadget peels iff fewer than k neighboring edges remain, and each estar
/// edge peels it.
GadgetReport check_vertex_gadget(const Gadget& g);
/// Dispatches on params.type.
GadgetReport check_gadget(const Gadget& g);

/// Everything buildable at one (k, d): C_k; for k >= 3 both b-blocks, simple
/// stable blocks m = 1..k-1, stable blocks m = 1..7 and vertex gadgets
/// delta = 0..5; for k = 2, d >= 3 tree-stable blocks p = 1..5 and vertex
/// gadgets delta = 0..5.
std::vector<GadgetParams> gadget_grid(unsigned k, unsigned d);

}  // namespace stashpeel
