#include "stashpeel/stash_solvers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <unordered_map>

#include "stashpeel/peeling.hpp"
#include "stashpeel/random.hpp"
#include "stashpeel/union_find.hpp"

namespace stashpeel {

std::vector<VertexId> StashResult::vertex_ids() const {
  return kind == StashMode::vertex ? to_vertex_ids(stash) : std::vector<VertexId>{};
}

std::vector<EdgeId> StashResult::edge_ids() const {
  return kind == StashMode::edge ? to_edge_ids(stash) : std::vector<EdgeId>{};
}

bool is_valid_stash(const Hypergraph& h, unsigned k, StashMode mode, std::span<const std::uint32_t> ids) {
  if (mode == StashMode::vertex) {
    auto vs = to_vertex_ids(ids);
    return k_core_after(h, k, vs, {}).core_empty();
  }
  auto es = to_edge_ids(ids);
  return k_core_after(h, k, {}, es).core_empty();
}

namespace {

struct Masks {
  std::vector<char> vertices;
  std::vector<char> edges;
};

Masks live_masks(const Hypergraph& h) {
  Masks m{std::vector<char>(h.vertex_bound(), 0), std::vector<char>(h.edge_bound(), 0)};
  for (VertexId v : h.vertices()) m.vertices[v.value] = 1;
  for (EdgeId e : h.edges()) m.edges[e.value] = 1;
  return m;
}

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& bits) const noexcept {
    std::uint64_t acc = 0x9e3779b97f4a7c15ULL;
    for (auto w : bits) {
      acc ^= w + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2);
    }
    return static_cast<std::size_t>(acc);
  }
};

// Splits a core (given as masks) into its connected components, ordered by
// smallest vertex id.
std::vector<Masks> split_components(const CoreKernel& kernel, const Masks& core) {
  const auto nv = static_cast<std::uint32_t>(kernel.vertex_bound());
  UnionFind uf(nv);
  for (std::uint32_t e = 0; e < core.edges.size(); ++e) {
    if (!core.edges[e]) continue;
    auto members = kernel.edge_vertices(e);
    for (std::size_t i = 1; i < members.size(); ++i) uf.unite(members[0], members[i]);
  }
  std::map<std::uint32_t, std::size_t> slot;  // root -> component index
  std::vector<Masks> out;
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (!core.vertices[v]) continue;
    auto [it, inserted] = slot.try_emplace(uf.find(v), out.size());
    if (inserted) {
      out.push_back(Masks{std::vector<char>(core.vertices.size(), 0), std::vector<char>(core.edges.size(), 0)});
    }
    out[it->second].vertices[v] = 1;
  }
  for (std::uint32_t e = 0; e < core.edges.size(); ++e) {
    if (core.edges[e]) out[slot.at(uf.find(kernel.edge_vertices(e)[0]))].edges[e] = 1;
  }
  return out;
}

std::size_t count_components(const CoreKernel& kernel, const Masks& core) {
  UnionFind uf(kernel.vertex_bound());
  std::size_t live = 0;
  for (std::uint32_t v = 0; v < core.vertices.size(); ++v) live += core.vertices[v] ? 1 : 0;
  std::size_t merged = 0;
  for (std::uint32_t e = 0; e < core.edges.size(); ++e) {
    if (!core.edges[e]) continue;
    auto members = kernel.edge_vertices(e);
    for (std::size_t i = 1; i < members.size(); ++i) merged += uf.unite(members[0], members[i]) ? 1 : 0;
  }
  return live - merged;
}

class ExactSearch {
 public:
  ExactSearch(const Hypergraph& h, unsigned k, StashMode mode) : kernel_(h, k), mode_(mode) {
    if (mode_ == StashMode::edge) {
      // Parallel edges are interchangeable: only the lowest-id live twin is tried first.
      std::map<std::vector<std::uint32_t>, std::uint32_t> first;
      twin_.resize(h.edge_bound());
      for (EdgeId e : h.edges()) {
        std::vector<std::uint32_t> key(kernel_.edge_vertices(e.value).begin(), kernel_.edge_vertices(e.value).end());
        std::sort(key.begin(), key.end());
        twin_[e.value] = first.try_emplace(key, e.value).first->second;
      }
    }
  }

  CoreKernel& kernel() { return kernel_; }

  std::optional<std::vector<std::uint32_t>> solve(const Masks& component, std::size_t budget) {
    for (std::size_t s = 1; s <= budget; ++s) {
      std::vector<std::uint32_t> chosen;
      if (search(component, s, chosen)) {
        std::sort(chosen.begin(), chosen.end());
        return chosen;
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<std::uint64_t> key_of(const Masks& state) const {
    const auto& mask = mode_ == StashMode::vertex ? state.vertices : state.edges;
    std::vector<std::uint64_t> bits((mask.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return bits;
  }

  // state is a non-empty core; looks for a stash of at most `budget` elements.
  bool search(const Masks& state, std::size_t budget, std::vector<std::uint32_t>& chosen) {
    if (budget == 0 || count_components(kernel_, state) > budget) return false;
    auto key = key_of(state);
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) return false;

    const auto& mask = mode_ == StashMode::vertex ? state.vertices : state.edges;
    Masks next;
    for (std::uint32_t x = 0; x < mask.size(); ++x) {
      if (!mask[x]) continue;
      if (mode_ == StashMode::edge && twin_[x] != x && state.edges[twin_[x]]) continue;
      next = state;
      (mode_ == StashMode::vertex ? next.vertices : next.edges)[x] = 0;
      const bool solved = kernel_.restrict_to_core(next.vertices, next.edges) == 0 ||
                          (budget > 1 && search(next, budget - 1, chosen));
      if (solved) {
        chosen.push_back(x);
        return true;
      }
    }
    auto& best = failed_[std::move(key)];
    best = std::max(best, budget);
    return false;
  }

  CoreKernel kernel_;
  StashMode mode_;
  std::vector<std::uint32_t> twin_;
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, BitsetHash> failed_;
};

}  // namespace

std::optional<StashResult> min_stash_exact(const Hypergraph& h, unsigned k, StashMode mode, std::size_t size_cap) {
  ExactSearch search(h, k, mode);
  Masks core = live_masks(h);
  StashResult result;
  result.kind = mode;
  result.optimal = true;
  result.residual_core_empty = true;
  if (search.kernel().restrict_to_core(core.vertices, core.edges) == 0) return result;

  auto components = split_components(search.kernel(), core);
  if (components.size() > size_cap) return std::nullopt;
  std::size_t used = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::size_t reserved = components.size() - i - 1;  // at least one per later component
    auto part = search.solve(components[i], size_cap - used - reserved);
    if (!part) return std::nullopt;
    used += part->size();
    result.stash.insert(result.stash.end(), part->begin(), part->end());
  }
  std::sort(result.stash.begin(), result.stash.end());
  result.residual_core_empty = is_valid_stash(h, k, mode, result.stash);
  return result;
}

CyclomaticCertificate two_edge_stash_standard(const Hypergraph& g, std::span<const EdgeId> insertion_order) {
  if (g.arity() != 2) {
    throw ArityError("the cyclomatic 2-edge-stash needs a standard graph (d=2), got d=" +
                     std::to_string(g.arity()));
  }
  std::vector<EdgeId> order(insertion_order.begin(), insertion_order.end());
  if (order.empty()) order = g.edges();
  if (order.size() != g.num_edges()) throw ParameterError("insertion order must list every edge once");

  UnionFind uf(g.vertex_bound());
  CyclomaticCertificate cert;
  std::size_t unions = 0;
  for (EdgeId e : order) {
    auto ends = g.edge(e);
    if (uf.unite(ends[0].value, ends[1].value)) {
      ++unions;
    } else {
      cert.removed_edges.push_back(e);
    }
  }
  std::sort(cert.removed_edges.begin(), cert.removed_edges.end());
  cert.components = g.num_vertices() - unions;
  cert.h = g.num_edges() - g.num_vertices() + cert.components;
  return cert;
}

namespace {

bool cover_search(const std::vector<std::array<std::uint32_t, 2>>& edges, std::vector<char>& in_cover,
                  std::size_t budget, std::vector<std::uint32_t>& chosen) {
  const std::array<std::uint32_t, 2>* open = nullptr;
  for (const auto& e : edges) {
    if (!in_cover[e[0]] && !in_cover[e[1]]) {
      open = &e;
      break;
    }
  }
  if (open == nullptr) return true;
  if (budget == 0) return false;
  auto ends = *open;
  if (ends[1] < ends[0]) std::swap(ends[0], ends[1]);
  for (auto v : ends) {
    in_cover[v] = 1;
    chosen.push_back(v);
    if (cover_search(edges, in_cover, budget - 1, chosen)) return true;
    chosen.pop_back();
    in_cover[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexId>> min_vertex_cover_exact(const Hypergraph& g, std::size_t size_cap) {
  if (g.arity() != 2) {
    throw ArityError("vertex cover is defined here for standard graphs (d=2), got d=" + std::to_string(g.arity()));
  }
  std::vector<std::array<std::uint32_t, 2>> edges;
  for (EdgeId e : g.edges()) edges.push_back({g.edge(e)[0].value, g.edge(e)[1].value});
  for (std::size_t s = 0; s <= size_cap; ++s) {
    std::vector<char> in_cover(g.vertex_bound(), 0);
    std::vector<std::uint32_t> chosen;
    if (cover_search(edges, in_cover, s, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return to_vertex_ids(chosen);
    }
  }
  return std::nullopt;
}

StashResult greedy_stash(const Hypergraph& h, unsigned k, StashMode mode, TieBreak tie_break, std::uint64_t seed) {
  CoreKernel kernel(h, k);
  Masks state = live_masks(h);
  Rng rng(seed);
  StashResult result;
  result.kind = mode;
  std::vector<std::uint32_t> core_degree(h.vertex_bound());
  while (kernel.restrict_to_core(state.vertices, state.edges) > 0) {
    const auto& mask = mode == StashMode::vertex ? state.vertices : state.edges;
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t x = 0; x < mask.size(); ++x) {
      if (mask[x]) candidates.push_back(x);
    }
    std::uint32_t pick = candidates.front();
    if (tie_break == TieBreak::seeded_random) {
      pick = candidates[rng.below(candidates.size())];
    } else if (tie_break == TieBreak::max_degree) {
      std::fill(core_degree.begin(), core_degree.end(), 0U);
      for (std::uint32_t e = 0; e < state.edges.size(); ++e) {
        if (!state.edges[e]) continue;
        for (auto v : kernel.edge_vertices(e)) ++core_degree[v];
      }
      auto score = [&](std::uint32_t x) {
        if (mode == StashMode::vertex) return std::size_t{core_degree[x]};
        std::size_t s = 0;
        for (auto v : kernel.edge_vertices(x)) s += core_degree[v];
        return s;
      };
      std::size_t best = 0;
      for (auto x : candidates) {
        if (auto s = score(x); s > best) {
          best = s;
          pick = x;
        }
      }
    }
    result.stash.push_back(pick);
    (mode == StashMode::vertex ? state.vertices : state.edges)[pick] = 0;
  }
  std::sort(result.stash.begin(), result.stash.end());
  result.optimal = false;
  result.residual_core_empty = is_valid_stash(h, k, mode, result.stash);
  return result;
}

}  // namespace stashpeel
