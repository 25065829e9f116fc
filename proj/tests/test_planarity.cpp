#include "ncg/catalog.hpp"
#include "ncg/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ncg;

namespace {

GroupSpec S(Family f, std::map<std::string, std::int64_t> p = {}) { return GroupSpec::make(f, std::move(p)); }

bool boost_planar(const SimpleGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph b(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) boost::add_edge(u, v, b);
  return boost::boyer_myrvold_planarity_test(b);
}

SimpleGraph bipartite(std::size_t a, std::size_t b) {
  SimpleGraph g{std::vector<std::string>(a + b)};
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

// Replaces every edge by a path of length two.
SimpleGraph subdivide(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  SimpleGraph out{std::vector<std::string>(n + g.edge_count())};
  std::size_t next = n;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      out.add_edge(u, next);
      out.add_edge(next, v);
      ++next;
    }
  }
  return out;
}

SimpleGraph petersen() {
  SimpleGraph g{std::vector<std::string>(10)};
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST_CASE("Kuratowski graphs and friends") {
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(bipartite(3, 3)));
  CHECK(is_planar(complete_graph(4)));
  CHECK(is_planar(bipartite(2, 7)));
  CHECK_FALSE(is_planar(petersen()));
  CHECK_FALSE(is_planar(subdivide(bipartite(3, 3))));
  CHECK(is_planar(SimpleGraph(std::vector<std::string>(3))));
  auto k5e = complete_graph(5);
  k5e.remove_edge(0, 1);
  CHECK(is_planar(k5e));
  CHECK_THROWS_AS(is_planar(complete_graph(25)), std::invalid_argument);
}

TEST_CASE("minor search on Kuratowski graphs") {
  CHECK(has_kuratowski_minor(complete_graph(5)));
  CHECK(has_kuratowski_minor(bipartite(3, 3)));
  CHECK(has_kuratowski_minor(petersen()));
  CHECK_FALSE(has_kuratowski_minor(complete_graph(4)));
  CHECK_FALSE(has_kuratowski_minor(bipartite(2, 7)));
  CHECK_THROWS_AS(has_kuratowski_minor(complete_graph(13)), std::invalid_argument);
}

TEST_CASE("maximal planar graphs on 24 vertices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    // Adds random edges while the graph stays planar, then one more.
    const std::size_t n = kMaxPlanarityVertices;
    SimpleGraph g{std::vector<std::string>(n)};
    for (int k = 0; k < 3000; ++k) {
      const auto u = rng() % n, v = rng() % n;
      if (u == v || g.adjacent(u, v)) continue;
      g.add_edge(u, v);
      if (!boost_planar(g)) g.remove_edge(u, v);
    }
    CAPTURE(trial);
    CHECK(is_planar(g));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        g.add_edge(u, v);
        CHECK_FALSE(is_planar(g));
        g.remove_edge(u, v);
      }
    }
  }
}

TEST_CASE("non-commuting graphs of small groups") {
  CHECK(is_planar(non_commuting_graph(build(S(Family::Dihedral, {{"m", 3}})))));
  CHECK(is_planar(non_commuting_graph(build(S(Family::Dihedral, {{"m", 4}})))));
  CHECK(is_planar(non_commuting_graph(build(S(Family::GeneralizedQuaternion, {{"m", 2}})))));
  CHECK_FALSE(is_planar(non_commuting_graph(build(S(Family::Dihedral, {{"m", 6}})))));
  CHECK_FALSE(is_planar(non_commuting_graph(build(S(Family::Dihedral, {{"m", 5}})))));
}

TEST_CASE("random graphs agree with Boyer-Myrvold") {
  std::mt19937 rng(1234);
  int planar = 0, nonplanar = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 5 + rng() % 10;
    // Edge counts around 2n..3n sit near the planarity threshold.
    const std::size_t target = std::min(n * (n - 1) / 2, n + rng() % (2 * n));
    SimpleGraph g{std::vector<std::string>(n)};
    while (g.edge_count() < target) {
      const auto u = rng() % n, v = rng() % n;
      if (u != v) g.add_edge(u, v);
    }
    const bool expected = boost_planar(g);
    (expected ? planar : nonplanar) += 1;
    CAPTURE(trial);
    CHECK(is_planar(g) == expected);
    if (n <= 10) CHECK(has_kuratowski_minor(g) != expected);
  }
  CHECK(planar > 50);
  CHECK(nonplanar > 50);
}

TEST_CASE("random subdivisions of non-planar graphs stay non-planar") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = (trial % 2) ? complete_graph(5) : bipartite(3, 3);
    auto s = subdivide(g);
    // Extra edges keep it non-planar.
    const auto n = s.vertex_count();
    for (int k = 0; k < 3; ++k) {
      const auto u = rng() % n, v = rng() % n;
      if (u != v) s.add_edge(u, v);
    }
    CHECK_FALSE(boost_planar(s));
    CHECK_FALSE(is_planar(s));
  }
}
