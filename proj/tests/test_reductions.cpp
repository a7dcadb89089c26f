#include "doctest.h"
#include "oracles.hpp"
#include "stashpeel/peeling.hpp"
#include "stashpeel/random.hpp"
#include "stashpeel/reductions.hpp"
#include "stashpeel/stash_solvers.hpp"

using namespace stashpeel;

namespace {

std::size_t min_vstash(const Hypergraph& h, unsigned k, std::size_t cap = 8) {
  auto r = min_vertex_stash_exact(h, k, cap);
  REQUIRE(r.has_value());
  return r->size();
}

std::size_t min_estash(const Hypergraph& h, unsigned k, std::size_t cap = 8) {
  auto r = min_edge_stash_exact(h, k, cap);
  REQUIRE(r.has_value());
  return r->size();
}

bool peels_without(const Hypergraph& h, unsigned k, const std::vector<EdgeId>& edges) {
  return k_core_after(h, k, {}, edges).core_empty();
}

bool peels_without(const Hypergraph& h, unsigned k, const std::vector<VertexId>& vertices) {
  return k_core_after(h, k, vertices, {}).core_empty();
}

}  // namespace

TEST_CASE("vc reduction of a single edge") {
  auto g = oracle::make(2, 2, {{0, 1}});
  auto r = reduce_vc_to_vertex_stash(g, 2, 2);
  CHECK(r.graph.num_vertices() == 4);
  CHECK(r.graph.num_edges() == 4);
  CHECK(min_vstash(r.graph, 2) == 1);
  CHECK(min_vertex_cover_exact(g)->size() == 1);
}

TEST_CASE("vc reduction of a triangle and of the empty graph") {
  auto r = reduce_vc_to_vertex_stash(oracle::triangle(), 2, 2);
  CHECK(min_vstash(r.graph, 2) == 2);

  Hypergraph empty(2);
  empty.add_vertices(3);
  auto e = reduce_vc_to_vertex_stash(empty, 3, 2);
  CHECK(e.graph.num_vertices() == 3);
  CHECK(e.graph.num_edges() == 0);
  CHECK(min_vstash(e.graph, 3) == 0);
}

TEST_CASE("vc reduction keeps original vertices free of other edges") {
  auto g = gen_random(6, 8, 2, 3);
  auto r = reduce_vc_to_vertex_stash(g, 3, 3);
  CHECK(r.graph.arity() == 3);
  for (VertexId v : g.vertices()) CHECK(r.graph.degree(v) == 3 * g.degree(v));
  CHECK_THROWS_AS(reduce_vc_to_vertex_stash(oracle::make(3, 3, {{0, 1, 2}}), 2, 3), ArityError);
  CHECK_THROWS_AS(reduce_vc_to_vertex_stash(g, 1, 2), ParameterError);
}

TEST_CASE("cover equals minimum vertex stash of the reduction") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::nonisomorphic_graphs(n)) {
      const auto cover = min_vertex_cover_exact(g)->size();
      for (unsigned k : {2U, 3U}) {
        for (unsigned d : {2U, 3U}) {
          auto r = reduce_vc_to_vertex_stash(g, k, d);
          CHECK(min_vstash(r.graph, k) == cover);
        }
      }
    }
  }
}

TEST_CASE("normalize_stash") {
  auto g = oracle::make(2, 2, {{0, 1}});
  auto r = reduce_vc_to_vertex_stash(g, 2, 2);
  const auto inner = r.map.edge_gadget_vertices[0];
  CHECK_THROWS_AS(normalize_stash(r.graph, r.map, {}), ContractViolation);
  // One inner vertex of C_2 leaves the path u - c - v, which 2-peels.
  std::vector<VertexId> s{inner[0]};
  CHECK(peels_without(r.graph, 2, s));
  auto n = normalize_stash(r.graph, r.map, s);
  CHECK(n == std::vector<VertexId>{VertexId(0)});
  CHECK(peels_without(r.graph, 2, n));
  s.push_back(inner[1]);
  CHECK(normalize_stash(r.graph, r.map, s) == n);

  std::vector<VertexId> orig{VertexId(1)};
  CHECK(normalize_stash(r.graph, r.map, orig) == orig);

  auto tri = reduce_vc_to_vertex_stash(oracle::triangle(), 3, 2);
  std::vector<VertexId> all{VertexId(0), VertexId(1), VertexId(2)};
  CHECK(normalize_stash(tri.graph, tri.map, all) == all);
}

TEST_CASE("normalized stashes stay valid and never grow") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random(5, 4 + seed % 4, 2, seed);
    auto r = reduce_vc_to_vertex_stash(g, 2 + seed % 2, 2);
    auto s = greedy_stash(r.graph, r.map.k, StashMode::vertex, TieBreak::seeded_random, seed);
    auto n = normalize_stash(r.graph, r.map, s.vertex_ids());
    CHECK(n.size() <= s.size());
    for (VertexId v : n) CHECK(v.value < g.num_vertices());
    CHECK(peels_without(r.graph, r.map.k, n));
  }
}

TEST_CASE("edge-stash reduction rejects k=d=2") {
  CHECK_THROWS_AS(reduce_vertex_to_edge_stash(oracle::triangle(), 2, 2), UnsupportedCaseError);
  try {
    reduce_vertex_to_edge_stash(oracle::triangle(), 2, 2);
  } catch (const UnsupportedCaseError& e) {
    CHECK(std::string(e.what()).find("cyclomatic") != std::string::npos);
  }
  CHECK_THROWS_AS(reduce_vertex_to_edge_stash(oracle::triangle(), 3, 3), ArityError);
}

TEST_CASE("edge-stash reduction examples") {
  auto tri = reduce_vertex_to_edge_stash(oracle::triangle(), 3, 2);
  CHECK(is_k_peelable(tri.graph, 3));
  CHECK(min_estash(tri.graph, 3) == 0);

  auto k4 = oracle::complete(4);
  auto f = reduce_vertex_to_edge_stash(k4, 3, 2);
  CHECK(min_vstash(k4, 3) == min_estash(f.graph, 3));

  auto triple = oracle::make(3, 3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  auto f2 = reduce_vertex_to_edge_stash(triple, 2, 3);
  CHECK(f2.map.x_slot_reuse);
  CHECK(min_vstash(triple, 2) == min_estash(f2.graph, 2));
}

TEST_CASE("reduction audits: P1 and the map invariants") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    for (auto [k, d] : {std::pair{3U, 2U}, std::pair{3U, 3U}, std::pair{2U, 3U}, std::pair{4U, 2U}}) {
      auto g = gen_random(5, 3 + seed % 5, d, seed);
      auto r = reduce_vertex_to_edge_stash(g, k, d);
      CHECK(r.graph.check_invariants());
      auto p1 = audit_p1(g, r.graph, r.map);
      CHECK_MESSAGE(p1.pass, p1.witness);
      REQUIRE(r.map.estar_pick.size() == g.num_vertices());
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        REQUIRE(r.map.estar_pick[v]);
        CHECK(std::find(r.map.estar[v].begin(), r.map.estar[v].end(), *r.map.estar_pick[v]) != r.map.estar[v].end());
        CHECK(*r.map.estar_pick[v] == r.map.estar[v].front());
      }
      // Every reduced edge has exactly one owner.
      std::vector<int> owners(r.graph.edge_bound(), 0);
      for (const auto& list : r.map.owned_edges)
        for (EdgeId e : list) owners[e.value]++;
      for (EdgeId e : r.graph.edges()) CHECK(owners[e.value] == 1);
    }
  }
}

TEST_CASE("peelability is preserved by the edge-stash reduction") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (auto [k, d] : {std::pair{3U, 2U}, std::pair{3U, 3U}, std::pair{2U, 3U}}) {
      auto g = gen_random(6, 2 + seed % 9, d, seed);
      auto r = reduce_vertex_to_edge_stash(g, k, d);
      CHECK(is_k_peelable(g, k) == is_k_peelable(r.graph, k));
    }
  }
}

TEST_CASE("push and lift") {
  auto k4 = oracle::complete(4);
  auto f = reduce_vertex_to_edge_stash(k4, 3, 2);

  std::vector<VertexId> one{VertexId(2)};
  auto pushed = push_vertex_stash(k4, f.map, one);
  CHECK(pushed == std::vector<EdgeId>{*f.map.estar_pick[2]});
  CHECK(peels_without(f.graph, 3, pushed));
  CHECK(lift_edge_stash(f.graph, f.map, pushed) == one);

  CHECK(push_vertex_stash(oracle::triangle(), reduce_vertex_to_edge_stash(oracle::triangle(), 3, 2).map, {}).empty());
  auto tri = reduce_vertex_to_edge_stash(oracle::triangle(), 3, 2);
  CHECK(lift_edge_stash(tri.graph, tri.map, {}).empty());

  auto everything = push_vertex_stash(k4, f.map, k4.vertices());
  CHECK(everything.size() == 4);
  CHECK(peels_without(f.graph, 3, everything));

  auto greedy = greedy_stash(f.graph, 3, StashMode::edge);
  auto lifted = lift_edge_stash(f.graph, f.map, greedy.edge_ids());
  CHECK(lifted.size() <= greedy.size());
  CHECK(peels_without(k4, 3, lifted));

  std::vector<VertexId> none;
  CHECK_THROWS_AS(push_vertex_stash(k4, f.map, none), ContractViolation);
  std::vector<EdgeId> no_edges;
  CHECK_THROWS_AS(lift_edge_stash(f.graph, f.map, no_edges), ContractViolation);
}

TEST_CASE("edge stash size equals vertex stash size on small inputs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (auto [k, d] : {std::pair{3U, 2U}, std::pair{3U, 3U}, std::pair{2U, 3U}}) {
      auto g = gen_random(d == 2 ? 5 : 4, 3 + seed % 5, d, seed * 31 + k);
      auto f = reduce_vertex_to_edge_stash(g, k, d);
      const auto s = min_vertex_stash_exact(g, k, 4);
      REQUIRE(s);
      CHECK(s->size() == min_estash(f.graph, k, 4));
      auto pushed = push_vertex_stash(g, f.map, s->vertex_ids());
      CHECK(pushed.size() == s->size());
      CHECK(peels_without(f.graph, k, pushed));
      auto back = lift_edge_stash(f.graph, f.map, pushed);
      CHECK(back.size() <= s->size());
      CHECK(peels_without(g, k, back));
    }
  }
}

TEST_CASE("map text round-trip") {
  auto f = reduce_vertex_to_edge_stash(gen_random(5, 6, 3, 1), 2, 3);
  auto text = serialize_map(f.map);
  CHECK(text.rfind("R vstash 2 3 5 6\n", 0) == 0);
  CHECK(text.find("F xslot-reuse") != std::string::npos);
  CHECK(parse_map(text) == f.map);

  auto v = reduce_vc_to_vertex_stash(oracle::triangle(), 3, 2);
  CHECK(parse_map(serialize_map(v.map)) == v.map);
  CHECK(serialize_map(v.map).find("M v 0 0 -") != std::string::npos);

  CHECK_THROWS(parse_map("R what 1 2 3 4\n"));
  CHECK_THROWS(parse_map("R vc 2 2 2 1\nM v 0 0 -\n"));
  CHECK_THROWS(parse_map("R vc 2 2 1 0\nM v 0 0 -\nZ 1\n"));
}

TEST_CASE("mapping-only helpers") {
  auto v = reduce_vc_to_vertex_stash(oracle::triangle(), 2, 2);
  std::vector<VertexId> s{v.map.edge_gadget_vertices[1][0], VertexId(0)};
  auto mapped = map_vertex_stash(v.map, s);
  CHECK(mapped == std::vector<VertexId>{VertexId(0), VertexId(1)});
  std::vector<VertexId> bogus{VertexId(999)};
  CHECK_THROWS_AS(map_vertex_stash(v.map, bogus), NotFoundError);
  std::vector<EdgeId> e{EdgeId(0)};
  CHECK_THROWS_AS(map_edge_stash(v.map, e), ParameterError);
}

TEST_CASE("reduced size is linear in k times the degree sum") {
  // C bounds |f(G)| / (k * sum max(deg, 1)) across the corpus.
  constexpr double C = 20.0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (auto [k, d] : {std::pair{3U, 2U}, std::pair{4U, 2U}, std::pair{5U, 3U}, std::pair{2U, 3U}}) {
      auto g = gen_random(6, 2 + seed % 12, d, seed);
      auto f = reduce_vertex_to_edge_stash(g, k, d);
      double sum = 0;
      for (VertexId v : g.vertices()) sum += std::max<std::size_t>(g.degree(v), 1);
      CHECK(static_cast<double>(f.graph.num_vertices()) <= C * k * sum);
    }
  }
}
