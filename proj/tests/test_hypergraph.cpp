#include "doctest.h"
#include "oracles.hpp"
#include "stashpeel/random.hpp"
#include "stashpeel/text_format.hpp"

using namespace stashpeel;

namespace {

// Rebuilds incidence from the edge table and compares it to the stored index.
bool incidence_matches_rescan(const Hypergraph& h) {
  std::vector<std::vector<EdgeId>> expected(h.vertex_bound());
  for (EdgeId e : h.edges())
    for (VertexId v : h.edge(e)) expected[v.value].push_back(e);
  for (VertexId v : h.vertices()) {
    auto got = h.incident(v);
    std::vector<EdgeId> sorted(got.begin(), got.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected[v.value]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("degree counts parallel edges") {
  auto tri = oracle::triangle();
  for (VertexId v : tri.vertices()) CHECK(tri.degree(v) == 2);

  Hypergraph h(2);
  auto vs = h.add_vertices(3);
  h.add_edge({vs[0], vs[1]});
  h.add_edge({vs[0], vs[1]});
  CHECK(h.degree(vs[0]) == 2);
  CHECK(h.degree(vs[2]) == 0);
  CHECK_THROWS_AS(h.degree(VertexId(9)), NotFoundError);
}

TEST_CASE("removal semantics") {
  auto tri = oracle::triangle();
  auto path = without_vertex(tri, VertexId(0));
  CHECK(path.num_vertices() == 2);
  CHECK(path.num_edges() == 1);

  auto two = without_edge(tri, EdgeId(1));
  CHECK(two.num_vertices() == 3);
  CHECK(two.num_edges() == 2);

  auto single = oracle::make(3, 3, {{0, 1, 2}});
  single.remove_vertex(VertexId(0));
  CHECK(single.num_vertices() == 2);
  CHECK(single.num_edges() == 0);

  CHECK_THROWS_AS(tri.remove_edge(EdgeId(7)), NotFoundError);
  tri.remove_edge(EdgeId(0));
  CHECK_THROWS_AS(tri.remove_edge(EdgeId(0)), NotFoundError);
  CHECK_FALSE(tri.has_edge(EdgeId(0)));
}

TEST_CASE("ids are never reused") {
  Hypergraph h(2);
  auto a = h.add_vertex();
  auto b = h.add_vertex();
  auto e = h.add_edge({a, b});
  h.remove_vertex(a);
  auto c = h.add_vertex();
  CHECK(c.value == 2);
  CHECK(h.add_edge({b, c}).value == e.value + 1);
}

TEST_CASE("add_edge rejects malformed edges") {
  Hypergraph h(3);
  auto vs = h.add_vertices(3);
  CHECK_THROWS_AS(h.add_edge({vs[0], vs[1]}), ParameterError);
  CHECK_THROWS_AS(h.add_edge({vs[0], vs[0], vs[1]}), ParameterError);
  CHECK_THROWS_AS(h.add_edge({vs[0], vs[1], VertexId(5)}), NotFoundError);
  CHECK_THROWS_AS(Hypergraph(1), ParameterError);
}

TEST_CASE("incidence stays the inverse of the edge table under random removals") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto h = gen_random(9, 14, 2 + seed % 3, seed);
    Rng rng(seed + 100);
    while (h.num_vertices() > 0) {
      REQUIRE(incidence_matches_rescan(h));
      REQUIRE(h.check_invariants());
      const auto vs = h.vertices();
      const auto es = h.edges();
      if (!es.empty() && rng.below(2) == 0) {
        const auto before_v = h.num_vertices();
        h.remove_edge(es[rng.below(es.size())]);
        CHECK(h.num_vertices() == before_v);
      } else {
        const VertexId v = vs[rng.below(vs.size())];
        const auto deg = h.degree(v);
        const auto before_e = h.num_edges();
        h.remove_vertex(v);
        CHECK(h.num_edges() == before_e - deg);
      }
    }
  }
}

TEST_CASE("parse examples") {
  auto tri = parse_hypergraph("h 2 3 3\ne 0 1\ne 1 2\ne 2 0\n");
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.num_edges() == 3);
  CHECK(tri.edge(EdgeId(2))[0] == VertexId(2));

  auto one = parse_hypergraph("# a comment\nh 3 3 1\ne 0 1 2\n");
  CHECK(one.arity() == 3);
  CHECK(one.num_edges() == 1);

  auto empty = parse_hypergraph("h 2 0 0\n");
  CHECK(empty.num_vertices() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("h 2 2 1\ne 0 0\n") == 2);
  CHECK(line_of("h 2 3 1\ne 0 1 2\n") == 2);
  CHECK(line_of("x 2 3 1\n") == 1);
  CHECK(line_of("h 2 3\n") == 1);
  CHECK(line_of("h 2 3 1\n# c\ne 0 5\n") == 3);
  CHECK(line_of("h 2 3 2\ne 0 1\n") > 0);
  CHECK(line_of("h 2 3 1\ne 0 1\ne 1 2\n") == 3);
}

TEST_CASE("serialize and parse round-trip") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto h = gen_random(8, 12, 2 + seed % 3, seed);
    const auto text = serialize_hypergraph(h);
    auto back = parse_hypergraph(text);
    CHECK(serialize_hypergraph(back) == text);
    REQUIRE(back.num_edges() == h.num_edges());
    for (EdgeId e : h.edges()) {
      auto a = h.edge(e);
      auto b = back.edge(e);
      CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
}

TEST_CASE("non-canonical graphs serialize compacted with id comments") {
  auto h = oracle::make(2, 4, {{0, 1}, {1, 2}, {2, 3}});
  h.remove_vertex(VertexId(0));
  const auto text = serialize_hypergraph(h);
  CHECK(text.rfind("h 2 3 2\n", 0) == 0);
  CHECK(text.find("# vertex-ids: 1 2 3") != std::string::npos);
  CHECK(text.find("# edge-ids: 1 2") != std::string::npos);
  auto back = parse_hypergraph(text);
  CHECK(back.num_vertices() == 3);
  CHECK(back.num_edges() == 2);
}

TEST_CASE("stash files") {
  StashFile s{StashKind::edge, {0, 4, 7}};
  CHECK(serialize_stash(s) == "S e 0 4 7\n");
  CHECK(parse_stash(serialize_stash(s)) == s);
  CHECK(parse_stash("S v\n").ids.empty());
  CHECK_THROWS_AS(parse_stash("S x 1\n"), ParseError);
  CHECK_THROWS_AS(parse_stash(""), ParseError);
}

TEST_CASE("gen_random is deterministic and uniform in arity") {
  auto a = gen_random(10, 5, 2, 1);
  auto b = gen_random(10, 5, 2, 1);
  CHECK(serialize_hypergraph(a) == serialize_hypergraph(b));
  CHECK(a.num_edges() == 5);
  CHECK(serialize_hypergraph(gen_random(10, 5, 2, 2)) != serialize_hypergraph(a));

  auto c = gen_random(4, 3, 3, 0);
  CHECK(c.arity() == 3);
  CHECK(c.num_edges() == 3);
  CHECK(c.check_invariants());
  CHECK_THROWS_AS(gen_random(2, 1, 3, 0), ParameterError);
}

TEST_CASE("Rng::below stays in range and hits every value") {
  Rng rng(5);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 700; ++i) {
    auto x = rng.below(7);
    REQUIRE(x < 7);
    seen[x]++;
  }
  for (int s : seen) CHECK(s > 0);
}
