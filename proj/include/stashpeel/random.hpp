#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "stashpeel/hypergraph.hpp"

namespace stashpeel {

/// Seeded generator with a pinned algorithm so other implementations can
/// reproduce instances bit for bit: std::mt19937_64 constructed directly from
/// the seed, and bounded draws by rejection (see below()).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). Draws r until r < 2^64 - (2^64 mod n), returns r mod n.
  std::uint64_t below(std::uint64_t n);

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Keys-as-edges random model: every edge picks d distinct vertices uniformly
/// (partial Fisher-Yates over a persistent permutation of 0..n-1). Parallel
/// edges can occur.
Hypergraph gen_random(std::size_t n_vertices, std::size_t n_edges, std::size_t d, std::uint64_t seed);

}  // namespace stashpeel
