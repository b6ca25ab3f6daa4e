#include <random>

#include "doctest.h"
#include "mhs/hypergraph.hpp"
#include "support.hpp"

using namespace mhs;
using mhs::test::random_instance;

namespace {

// Subset definition: S is a transversal and no S \ {v} is one.
bool minimal_by_definition(const Hypergraph& h, const VertexSet& s) {
  auto transversal = [&](const VertexSet& t) {
    for (const auto& e : h.edge_list()) {
      bool hit = std::any_of(e.begin(), e.end(),
                             [&](Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); });
      if (!hit) return false;
    }
    return true;
  };
  if (!transversal(s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    VertexSet smaller = s;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (transversal(smaller)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse triangle") {
  auto h = parse_hypergraph("p hg 3 3\n1 2\n1 3\n2 3\n");
  CHECK(h.universe_size() == 3);
  CHECK(h.num_edges() == 3);
  CHECK(h.edge_list() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(h.rank() == 2);
}

TEST_CASE("parse collapses duplicate edges") {
  auto h = parse_hypergraph("p hg 3 2\n1 2\n1 2\n");
  CHECK(h.universe_size() == 3);
  CHECK(h.edge_list() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("parse rejects out-of-range vertex with its line number") {
  try {
    parse_hypergraph("p hg 2 1\n1 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("vertex 3 out of range") != std::string::npos);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_hypergraph("p graph 3 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("p hg 3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("p hg 3 1\n1 2\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("p hg 3 1\n1 0\n"), ParseError);
  try {
    parse_hypergraph("c comment\np hg 3 2\n1 2\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("non-integer token 'x'") != std::string::npos);
  }
}

TEST_CASE("parse comments, isolated vertices and empty edges") {
  auto h = parse_hypergraph("# header follows\nc another\np hg 5 2\nc inside\n4 2\n\n\n");
  CHECK(h.num_vertices() == 5);
  CHECK(h.edge_list() == std::vector<Edge>{{}, {2, 4}});
  CHECK(h.has_empty_edge());
}

TEST_CASE("serialize then parse is the identity") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto h = random_instance(seed, 4, 9, 20);
    std::ostringstream out;
    write_hypergraph(out, h);
    CHECK(parse_hypergraph(out.str()) == h);
  }
  Hypergraph with_empty(3, {{}, {1, 2}});
  std::ostringstream out;
  write_hypergraph(out, with_empty);
  CHECK(parse_hypergraph(out.str()) == with_empty);
}

TEST_CASE("hypergraph construction validates ids") {
  CHECK_THROWS_AS(Hypergraph(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, VertexSet{1, 2}, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("select removes hit edges and adds to S") {
  Hypergraph h(3, {{1, 2}, {2, 3}, {1, 3}});
  auto inst = select(Instance(h), 2);
  CHECK(inst.working().edge_list() == std::vector<Edge>{{1, 3}});
  CHECK(inst.partial() == VertexSet{2});
  CHECK_FALSE(inst.working().has_vertex(2));

  Hypergraph single(1, {{1}});
  auto s = select(Instance(single), 1);
  CHECK(s.working().num_edges() == 0);
  CHECK(s.partial() == VertexSet{1});

  Hypergraph tri(9, {{1, 2, 3}});
  Instance start(tri, Hypergraph(9, VertexSet{1, 2, 3}, {{1, 2, 3}}), VertexSet{9});
  auto t = select(start, 3);
  CHECK(t.working().num_edges() == 0);
  CHECK(t.partial() == VertexSet{3, 9});
}

TEST_CASE("discard shrinks edges and collapses duplicates") {
  Hypergraph h(3, {{1, 2}, {2, 3}, {1, 3}});
  auto inst = discard(Instance(h), 2);
  CHECK(inst.working().edge_list() == std::vector<Edge>{{1}, {1, 3}, {3}});
  CHECK(inst.partial().empty());

  Hypergraph dup(2, {{1, 2}, {1}});
  CHECK(discard(Instance(dup), 2).working().edge_list() == std::vector<Edge>{{1}});

  Hypergraph single(1, {{1}});
  auto e = discard(Instance(single), 1);
  CHECK(e.working().edge_list() == std::vector<Edge>{{}});
  CHECK(e.working().has_empty_edge());
}

TEST_CASE("select and discard need a working vertex") {
  Hypergraph h(3, {{1, 2}});
  Instance inst(h);
  inst.select(1);
  CHECK_THROWS_AS(inst.select(1), std::invalid_argument);
  CHECK_THROWS_AS(inst.discard(1), std::invalid_argument);
}

TEST_CASE("select and discard commute") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto h = random_instance(seed, 3, 8, 14);
    for (Vertex u = 1; u <= 8; ++u) {
      for (Vertex v = 1; v <= 8; ++v) {
        if (u == v) continue;
        Instance a(h);
        a.select(u);
        a.discard(v);
        Instance b(h);
        b.discard(v);
        b.select(u);
        CHECK(a.working() == b.working());
        CHECK(a.partial() == b.partial());
      }
    }
  }
}

TEST_CASE("degree profile") {
  Hypergraph h(4, {{1, 2}, {1, 3, 4}});
  auto p = degree_profile(h, 1);
  CHECK(p.degree == 2);
  CHECK(p.of_size(2) == 1);
  CHECK(p.of_size(3) == 1);
  CHECK(p.of_size(1) == 0);
  CHECK(p.up_to(2) == 1);
  CHECK(p.neighbors == VertexSet{2, 3, 4});

  Hypergraph small(3, {{1, 2}});
  auto iso = degree_profile(small, 3);
  CHECK(iso.degree == 0);
  CHECK(iso.neighbors.empty());

  std::vector<Edge> all;
  for (Vertex a = 1; a <= 5; ++a)
    for (Vertex b = a + 1; b <= 5; ++b)
      for (Vertex c = b + 1; c <= 5; ++c) all.push_back({a, b, c});
  Hypergraph h3(5, all);
  auto q = degree_profile(h3, 1);
  CHECK(q.degree == 6);
  CHECK(q.of_size(3) == 6);
  CHECK(q.neighbors == VertexSet{2, 3, 4, 5});
}

TEST_CASE("minimal transversal examples") {
  Hypergraph path(3, {{1, 2}, {2, 3}});
  CHECK(is_minimal_transversal(path, VertexSet{2}));
  CHECK_FALSE(is_minimal_transversal(path, VertexSet{1, 2}));
  Hypergraph two(5, {{1, 2, 3}, {3, 4, 5}});
  CHECK(is_minimal_transversal(two, VertexSet{1, 4}));
  CHECK(minimal_by_definition(two, VertexSet{1, 4}));
  CHECK_FALSE(is_minimal_transversal(two, VertexSet{1}));
  Hypergraph edgeless(3, {});
  CHECK(is_minimal_transversal(edgeless, VertexSet{}));
  CHECK_FALSE(is_minimal_transversal(edgeless, VertexSet{1}));
}

TEST_CASE("private-edge test agrees with the subset definition") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 7;
    auto h = random_instance(seed, 1 + static_cast<int>(seed % 5), n, 12);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      VertexSet s;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) s.push_back(static_cast<Vertex>(i + 1));
      }
      REQUIRE(is_minimal_transversal(h, s) == minimal_by_definition(h, s));
    }
  }
}
