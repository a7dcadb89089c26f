"""k-core peeling, minimum stashes and stash hardness gadgets."""

from ._stashpeel import (
    ContractViolation,
    Hypergraph,
    ParseError,
    gadget,
    gen_random,
    greedy_stash,
    is_k_peelable,
    k_core,
    k_core_after,
    lift_edge_stash,
    min_stash_exact,
    min_vertex_cover_exact,
    normalize_stash,
    push_vertex_stash,
    reduce,
    two_edge_stash_standard,
    verify_gadgets,
)

__all__ = [
    "ContractViolation",
    "Hypergraph",
    "ParseError",
    "gadget",
    "gen_random",
    "greedy_stash",
    "is_k_peelable",
    "k_core",
    "k_core_after",
    "lift_edge_stash",
    "min_stash_exact",
    "min_vertex_cover_exact",
    "normalize_stash",
    "push_vertex_stash",
    "reduce",
    "two_edge_stash_standard",
    "verify_gadgets",
]
