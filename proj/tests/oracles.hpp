#pragma once

// Brute-force reference implementations for the tests. Nothing here calls the
// peeling engine, the exact solvers or the union-find; each answer comes from
// direct enumeration over subsets.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "stashpeel/hypergraph.hpp"

namespace oracle {

using stashpeel::EdgeId;
using stashpeel::Hypergraph;
using stashpeel::VertexId;

inline Hypergraph make(std::size_t d, std::size_t n, std::initializer_list<std::vector<std::uint32_t>> edges) {
  Hypergraph h(d);
  h.add_vertices(n);
  for (const auto& e : edges) {
    std::vector<VertexId> vs;
    for (auto v : e) vs.emplace_back(v);
    h.add_edge(vs);
  }
  return h;
}

inline Hypergraph triangle() { return make(2, 3, {{0, 1}, {1, 2}, {2, 0}}); }

inline Hypergraph complete(std::size_t n) {
  Hypergraph h(2);
  h.add_vertices(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) h.add_edge({VertexId(i), VertexId(j)});
  return h;
}

struct Core {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// The k-core as the largest vertex subset whose induced sub-hypergraph has
// minimum degree >= k (any two such subsets have a union of the same kind, so
// the largest one is the unique maximal one). Exponential in |V|.
inline Core brute_core(const Hypergraph& h, unsigned k) {
  const auto vs = h.vertices();
  const auto es = h.edges();
  const std::size_t n = vs.size();
  std::vector<std::uint64_t> edge_mask;
  for (EdgeId e : es) {
    std::uint64_t m = 0;
    for (VertexId v : h.edge(e)) m |= std::uint64_t{1} << (std::find(vs.begin(), vs.end(), v) - vs.begin());
    edge_mask.push_back(m);
  }
  std::uint64_t best = 0;
  int best_size = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size <= best_size) continue;
    std::vector<unsigned> deg(n, 0);
    for (auto m : edge_mask) {
      if ((m & s) != m) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1U) ++deg[i];
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if ((s >> i & 1U) && deg[i] < k) ok = false;
    if (ok) {
      best = s;
      best_size = size;
    }
  }
  Core c;
  for (std::size_t i = 0; i < n; ++i)
    if (best >> i & 1U) c.vertices.push_back(vs[i]);
  for (std::size_t j = 0; j < es.size(); ++j)
    if (best && (edge_mask[j] & best) == edge_mask[j]) c.edges.push_back(es[j]);
  return c;
}

// Naive fixpoint peel: rescan every vertex until nothing changes.
inline bool naive_peelable(const Hypergraph& h, unsigned k, const std::vector<char>& vertex_gone,
                           const std::vector<char>& edge_gone) {
  std::vector<char> vgone = vertex_gone;
  std::vector<char> egone = edge_gone;
  vgone.resize(h.vertex_bound(), 0);
  egone.resize(h.edge_bound(), 0);
  for (EdgeId e : h.edges())
    for (VertexId v : h.edge(e))
      if (vgone[v.value]) egone[e.value] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : h.vertices()) {
      if (vgone[v.value]) continue;
      unsigned deg = 0;
      for (EdgeId e : h.incident(v)) deg += egone[e.value] ? 0 : 1;
      if (deg < k) {
        vgone[v.value] = 1;
        for (EdgeId e : h.incident(v)) egone[e.value] = 1;
        changed = true;
      }
    }
  }
  for (VertexId v : h.vertices())
    if (!vgone[v.value]) return false;
  return true;
}

inline bool naive_vertex_stash_ok(const Hypergraph& h, unsigned k, const std::vector<std::uint32_t>& stash) {
  std::vector<char> gone(h.vertex_bound(), 0);
  for (auto v : stash) gone[v] = 1;
  return naive_peelable(h, k, gone, {});
}

inline bool naive_edge_stash_ok(const Hypergraph& h, unsigned k, const std::vector<std::uint32_t>& stash) {
  std::vector<char> gone(h.edge_bound(), 0);
  for (auto e : stash) gone[e] = 1;
  return naive_peelable(h, k, {}, gone);
}

// Calls f(subset) for every size-r subset of items in lexicographic order;
// stops early when f returns true.
template <class F>
bool for_each_subset(const std::vector<std::uint32_t>& items, std::size_t r, F&& f) {
  if (r > items.size()) return false;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::uint32_t> pick(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) pick[i] = items[idx[i]];
    if (f(pick)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == items.size() - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Smallest stash by unpruned enumeration over all vertices (or edges).
inline std::size_t brute_min_stash(const Hypergraph& h, unsigned k, bool edges) {
  std::vector<std::uint32_t> items;
  if (edges) {
    for (EdgeId e : h.edges()) items.push_back(e.value);
  } else {
    for (VertexId v : h.vertices()) items.push_back(v.value);
  }
  for (std::size_t r = 0; r <= items.size(); ++r) {
    const bool found = for_each_subset(items, r, [&](const std::vector<std::uint32_t>& s) {
      return edges ? naive_edge_stash_ok(h, k, s) : naive_vertex_stash_ok(h, k, s);
    });
    if (found) return r;
  }
  return items.size();
}

inline bool covers(const Hypergraph& g, const std::vector<std::uint32_t>& s) {
  for (EdgeId e : g.edges()) {
    const auto ends = g.edge(e);
    if (std::none_of(ends.begin(), ends.end(),
                     [&](VertexId v) { return std::find(s.begin(), s.end(), v.value) != s.end(); }))
      return false;
  }
  return true;
}

inline std::size_t brute_vertex_cover(const Hypergraph& g) {
  std::vector<std::uint32_t> items;
  for (VertexId v : g.vertices()) items.push_back(v.value);
  for (std::size_t r = 0; r <= items.size(); ++r)
    if (for_each_subset(items, r, [&](const std::vector<std::uint32_t>& s) { return covers(g, s); })) return r;
  return items.size();
}

// Connected components by repeated DFS over the incidence lists.
inline std::size_t components(const Hypergraph& h) {
  std::vector<char> seen(h.vertex_bound(), 0);
  std::size_t count = 0;
  for (VertexId start : h.vertices()) {
    if (seen[start.value]) continue;
    ++count;
    std::vector<VertexId> stack{start};
    seen[start.value] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : h.incident(v))
        for (VertexId w : h.edge(e))
          if (!seen[w.value]) {
            seen[w.value] = 1;
            stack.push_back(w);
          }
    }
  }
  return count;
}

inline bool acyclic_after(const Hypergraph& g, const std::vector<EdgeId>& removed) {
  Hypergraph rest = g;
  for (EdgeId e : removed) rest.remove_edge(e);
  return rest.num_edges() + components(rest) == rest.num_vertices();
}

// All non-isomorphic simple graphs on exactly n vertices (n <= 6), as edge
// bitmasks over the pairs (i, j), i < j, in lexicographic order. Canonical
// form = smallest mask over all vertex permutations.
inline std::vector<Hypergraph> nonisomorphic_graphs(std::size_t n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j) pairs.emplace_back(i, j);
  auto pair_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin());
  };
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> canon;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
    std::uint32_t best = UINT32_MAX;
    for (const auto& perm : perms) {
      std::uint32_t m = 0;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1U) m |= std::uint32_t{1} << pair_index(perm[pairs[b].first], perm[pairs[b].second]);
      best = std::min(best, m);
    }
    canon.insert(best);
  }
  std::vector<Hypergraph> out;
  for (auto mask : canon) {
    Hypergraph g(2);
    g.add_vertices(n);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1U)
        g.add_edge({VertexId(static_cast<std::uint32_t>(pairs[b].first)),
                    VertexId(static_cast<std::uint32_t>(pairs[b].second))});
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracle
