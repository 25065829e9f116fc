#include "ncg/catalog.hpp"
#include "ncg/graph.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ncg;

namespace {

GroupSpec S(Family f, std::map<std::string, std::int64_t> p = {}) { return GroupSpec::make(f, std::move(p)); }

SimpleGraph path(std::size_t n) {
  SimpleGraph g{std::vector<std::string>(n)};
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("SimpleGraph basics") {
  SimpleGraph g(std::vector<std::string>{"u", "v", "w"});
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(1) == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 0);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complement(complete_graph(5)).edge_count() == 0);
}

TEST_CASE("non-commuting graph sizes") {
  const auto sz = non_commuting_graph(build(S(Family::SuzukiSz2)));
  CHECK(sz.vertex_count() == 19);
  const auto d6 = non_commuting_graph(build(S(Family::Dihedral, {{"m", 3}})));
  CHECK(d6.vertex_count() == 5);
  CHECK(d6.edge_count() == 9);
  CHECK_THROWS_AS(non_commuting_graph(build(S(Family::Cyclic, {{"k", 6}}))), std::invalid_argument);
  const auto d8 = build(S(Family::Dihedral, {{"m", 4}}));
  const auto g = non_commuting_graph(d8);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(g.label(v) != "1");
}

TEST_CASE("clique decompositions of commuting graphs") {
  auto cliques = [](const GroupSpec& s) {
    return clique_decomposition(complement(non_commuting_graph(build(s))));
  };
  CHECK(cliques(S(Family::SuzukiSz2))->to_string() == "{4,3,3,3,3,3}");
  CHECK(cliques(S(Family::Quasidihedral, {{"n", 4}}))->to_string() == "{6,2,2,2,2}");
  const auto psl = cliques(S(Family::PSL2, {{"k", 2}}));
  REQUIRE(psl);
  std::map<std::size_t, int> count;
  for (auto a : psl->cliqueSizes) ++count[a];
  CHECK(count == std::map<std::size_t, int>{{2, 10}, {3, 5}, {4, 6}});
  const auto gl = cliques(S(Family::GL2, {{"q", 3}}));
  REQUIRE(gl);
  count.clear();
  for (auto a : gl->cliqueSizes) ++count[a];
  CHECK(count == std::map<std::size_t, int>{{2, 6}, {4, 4}, {6, 3}});
}

TEST_CASE("clique detection on plain graphs") {
  const SimpleGraph empty{std::vector<std::string>(4)};
  CHECK(clique_decomposition(empty)->cliqueSizes == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK_FALSE(clique_decomposition(path(3)).has_value());
  CHECK(clique_decomposition(complete_graph(4))->cliqueSizes == std::vector<std::size_t>{4});
}

TEST_CASE("relabelling preserves structure") {
  std::mt19937 rng(11);
  for (const auto& spec : {S(Family::Dihedral, {{"m", 5}}), S(Family::GL2, {{"q", 3}}), S(Family::M16)}) {
    const auto g = non_commuting_graph(build(spec));
    std::vector<std::size_t> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = g.permuted(perm);
    CHECK(h.edge_count() == g.edge_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      CHECK(h.degree(perm[u]) == g.degree(u));
    }
    CHECK(clique_decomposition(complement(h)) == clique_decomposition(complement(g)));
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("vertex degree is |G| - |C(x)|") {
  const auto grp = build(S(Family::FrobeniusPQ, {{"p", 3}, {"q", 7}}));
  const auto g = non_commuting_graph(grp);
  const auto z = center(grp);
  std::size_t v = 0;
  for (Elem x = 0; x < grp.order(); ++x) {
    if (std::binary_search(z.begin(), z.end(), x)) continue;
    CHECK(g.degree(v) == grp.order() - centralizer(grp, x).size());
    ++v;
  }
}

TEST_CASE("connected components") {
  SimpleGraph g{std::vector<std::string>(5)};
  g.add_edge(0, 3);
  g.add_edge(4, 1);
  const auto comps = connected_components(g);
  CHECK(comps == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 4}, {2}});
}
