#pragma once

// Gadget builders for the stash hardness reductions.
//
// Every builder first lays out a standard-graph skeleton (or, for the k = 2
// hyper-tree constructions, native d-ary edges) and then lifts it to arity d
// by appending one shared set of d - 2 dummy vertices to every edge.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stashpeel/hypergraph.hpp"

namespace stashpeel {

enum class GadgetType {
  ck,             // C_k(u, v) for the vertex-cover reduction
  two_block,
  three_block,
  simple_stable,  // stable block with m <= k - 1
  stable,         // (k-1)-ary tree of simple stable blocks
  tree_stable,    // k = 2, d >= 3 hyper-tree stable block
  vertex,         // P_k(v) replacing one vertex in the edge-stash reduction
};

std::string to_string(GadgetType type);
std::optional<GadgetType> gadget_type_from_string(const std::string& name);

enum class PortKind {
  terminal,  // the member vertex is itself shared with the host graph (C_k's u and v)
  slot,      // a neighboring edge made of the members plus d - |members| outside vertices
};

struct Port {
  std::string name;
  PortKind kind = PortKind::slot;
  std::vector<VertexId> members;
};

struct GadgetParams {
  GadgetType type = GadgetType::ck;
  unsigned k = 0;
  unsigned d = 0;
  unsigned degree = 0;  // b, m, p or delta depending on the type; 0 for C_k
  unsigned depth = 0;   // tree depth for stable and tree-stable blocks
};

struct Gadget {
  GadgetParams params;
  Hypergraph graph{2};
  std::vector<Port> ports;
  std::vector<EdgeId> estar;       // internal edges whose stashing peels the gadget
  std::vector<VertexId> dummies;
  std::optional<VertexId> primary;  // central vertex, hyper-tree root, or primary node

  std::size_t slots(const Port& port) const { return params.d - port.members.size(); }
  /// Every vertex except terminal-port vertices.
  std::vector<VertexId> internal_vertices() const;
  bool has_parallel_edges() const;
  /// Ports reference live non-dummy vertices, estar edges are live and avoid
  /// terminals, the graph is params.d-uniform.
  bool well_formed() const;
};

/// C_k(u, v): vertices u, v (terminal ports) and 1..k each joined to both;
/// for k >= 3 the internal vertices form K_k minus the edge {1, k}.
Gadget build_ck_gadget(unsigned k, unsigned d);

/// b in {2, 3}, k >= 3. 3-blocks: a single node for k = 3, a bespoke
/// 12-vertex block for k = 4, and the three-layer block for k >= 5.
Gadget build_b_block(unsigned b, unsigned k, unsigned d);

/// Central vertex with m ports plus a chain of k - 1 blocks (2-blocks at the
/// ends, 3-blocks between). 1 <= m <= k - 1.
Gadget build_simple_stable_block(unsigned m, unsigned k, unsigned d);

/// m >= 1, k >= 3. Delegates to the simple block for m <= k - 1; otherwise a
/// minimal-depth (k-1)-ary tree of simple blocks trimmed to m leaf ports.
Gadget build_stable_block(unsigned m, unsigned k, unsigned d);

/// k = 2 stable block of degree p >= 1 on a (d-1)-ary hyper-tree; d >= 3.
/// Port i holds (r, w_i) and leaves d - 2 slots.
Gadget build_tree_stable_block(unsigned p, unsigned d);

/// P_k(v) for a vertex of degree delta: primary node, delta 3-blocks and a
/// stable block (k >= 3), or primary vertex, t/x vertices and a hyper-tree
/// stable block (k = 2, d >= 3). delta = 0 yields the primary node next to a
/// degree-0 stable block, which peels on its own.
Gadget build_vertex_gadget(unsigned delta, unsigned k, unsigned d);

/// Dispatches on params.type, reading b/m/p/delta from params.degree.
Gadget build_gadget(const GadgetParams& params);

/// Negative control: the gadget with one load-bearing edge deleted (the
/// lowest estar edge for stable and vertex gadgets, the lowest edge
/// otherwise). Gadgets without edges lose their first port instead.
Gadget negative_control(const Gadget& g);

/// Text form with `# port <name> <kind> <members...>` and `# estar <ids...>`
/// annotations after the header.
std::string serialize_gadget(const Gadget& g);

}  // namespace stashpeel
