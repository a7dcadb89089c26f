#include "stashpeel/random.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace stashpeel {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw ParameterError("Rng::below requires n > 0");
  // (2^64 mod n) computed without overflow.
  const std::uint64_t remainder = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  const std::uint64_t limit = remainder == 0 ? 0 : std::numeric_limits<std::uint64_t>::max() - remainder + 1;
  for (;;) {
    std::uint64_t r = engine_();
    if (limit == 0 || r < limit) return r % n;
  }
}

Hypergraph gen_random(std::size_t n_vertices, std::size_t n_edges, std::size_t d, std::uint64_t seed) {
  if (d < 2) throw ParameterError("arity must be at least 2");
  if (n_vertices < d) {
    throw ParameterError("need at least d=" + std::to_string(d) + " vertices, got " +
                         std::to_string(n_vertices));
  }
  Hypergraph h(d);
  h.add_vertices(n_vertices);
  Rng rng(seed);
  std::vector<std::uint32_t> perm(n_vertices);
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<VertexId> members(d);
  for (std::size_t e = 0; e < n_edges; ++e) {
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t pick = j + rng.below(n_vertices - j);
      std::swap(perm[j], perm[pick]);
      members[j] = VertexId(perm[j]);
    }
    h.add_edge(members);
  }
  return h;
}

}  // namespace stashpeel
