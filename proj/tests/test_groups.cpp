#include "ncg/catalog.hpp"
#include "ncg/group.hpp"
#include "ncg/todd_coxeter.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ncg;

namespace {

GroupSpec S(Family f, std::map<std::string, std::int64_t> p = {}) { return GroupSpec::make(f, std::move(p)); }

GroupSpec with_cyclic(GroupSpec g, std::int64_t k) { return GroupSpec::product(std::move(g), S(Family::Cyclic, {{"k", k}})); }

std::vector<GroupSpec> sample_specs() {
  return {S(Family::Dihedral, {{"m", 3}}),
          S(Family::Dihedral, {{"m", 6}}),
          S(Family::GeneralizedQuaternion, {{"m", 2}}),
          S(Family::GeneralizedQuaternion, {{"m", 5}}),
          S(Family::Quasidihedral, {{"n", 4}}),
          S(Family::Metacyclic, {{"m", 4}, {"n", 3}}),
          S(Family::SuzukiSz2),
          S(Family::FrobeniusPQ, {{"p", 3}, {"q", 7}}),
          S(Family::PSL2, {{"k", 2}}),
          S(Family::GL2, {{"q", 3}}),
          S(Family::HanakiU, {{"n", 3}}),
          S(Family::HanakiV, {{"p", 3}, {"n", 1}}),
          S(Family::ExtraspecialP3, {{"p", 3}, {"exponent", 9}}),
          S(Family::M16),
          S(Family::Z4SemidirectZ4),
          S(Family::D8StarZ4),
          S(Family::SG16_3),
          with_cyclic(S(Family::Dihedral, {{"m", 4}}), 2)};
}

bool brute_associative(const std::vector<Elem>& t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
  return true;
}

std::vector<Elem> table_of(const GroupTable& g) {
  std::vector<Elem> t;
  for (Elem a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    t.insert(t.end(), r.begin(), r.end());
  }
  return t;
}

}  // namespace

TEST_CASE("catalog orders agree with expected_order") {
  for (const auto& spec : sample_specs()) {
    CAPTURE(spec.name());
    const auto g = build(spec);
    REQUIRE(expected_order(spec).has_value());
    CHECK(static_cast<std::int64_t>(g.order()) == *expected_order(spec));
  }
  CHECK(build(S(Family::SuzukiSz2)).order() == 20);
  CHECK(build(S(Family::PSL2, {{"k", 2}})).order() == 60);
  CHECK(build(S(Family::GL2, {{"q", 3}})).order() == 48);
  CHECK(build(S(Family::GL2, {{"q", 4}})).order() == 180);
  CHECK(build(S(Family::Quasidihedral, {{"n", 5}})).order() == 32);
  CHECK(build(S(Family::HanakiV, {{"p", 2}, {"n", 2}})).order() == 64);
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(build(S(Family::Dihedral, {{"m", 2}})), SpecError);
  CHECK_THROWS_AS(build(S(Family::Metacyclic, {{"m", 2}, {"n", 1}})), SpecError);
  CHECK_THROWS_AS(build(S(Family::Quasidihedral, {{"n", 3}})), SpecError);
  CHECK_THROWS_AS(build(S(Family::FrobeniusPQ, {{"p", 3}, {"q", 5}})), SpecError);
  CHECK_THROWS_AS(build(S(Family::GL2, {{"q", 6}})), SpecError);
  CHECK_THROWS_AS(build(S(Family::ExtraspecialP3, {{"p", 3}, {"exponent", 4}})), SpecError);
  CHECK_THROWS_AS(build(S(Family::Dihedral)), SpecError);
}

TEST_CASE("centers") {
  CHECK(center(build(S(Family::SuzukiSz2))).size() == 1);
  CHECK(center(build(S(Family::GL2, {{"q", 3}}))).size() == 2);
  CHECK(center(build(S(Family::GL2, {{"q", 4}}))).size() == 3);
  CHECK(center(build(S(Family::PSL2, {{"k", 2}}))).size() == 1);
  for (std::int64_t n = 2; n <= 4; ++n) CHECK(center(build(S(Family::HanakiU, {{"n", n}}))).size() == (1u << n));
  CHECK(center(build(S(Family::HanakiV, {{"p", 3}, {"n", 1}}))).size() == 3);
  CHECK(center(build(S(Family::Dihedral, {{"m", 6}}))).size() == 2);
  CHECK(center(build(S(Family::Dihedral, {{"m", 7}}))).size() == 1);
}

TEST_CASE("commutativity degree and centralizer counts") {
  const auto d8 = build(S(Family::Dihedral, {{"m", 4}}));
  CHECK(commutativity_degree(d8) == Rational(5, 8));
  CHECK(centralizer_count(d8) == 4);
  CHECK(conjugacy_class_count(d8) == 5);
  const auto s3 = build(S(Family::Dihedral, {{"m", 3}}));
  CHECK(centralizer_count(s3) == 5);
  CHECK(commutativity_degree(s3) == Rational(1, 2));
  CHECK(commutativity_degree(build(S(Family::ExtraspecialP3, {{"p", 3}, {"exponent", 3}}))) == Rational(11, 27));
  CHECK(commutativity_degree(build(S(Family::Dihedral, {{"m", 5}}))) == Rational(2, 5));
  CHECK(commutativity_degree(build(S(Family::Dihedral, {{"m", 7}}))) == Rational(5, 14));
  for (const auto& spec : sample_specs()) {
    const auto pr = commutativity_degree_both(build(spec));
    CHECK_MESSAGE(pr.agree(), spec.name());
  }
}

TEST_CASE("isomorphism checks") {
  const auto d8 = build(S(Family::Dihedral, {{"m", 4}}));
  const auto q8 = build(S(Family::GeneralizedQuaternion, {{"m", 2}}));
  CHECK_FALSE(iso_check_small(d8, q8));
  CHECK(iso_check_small(build(S(Family::Metacyclic, {{"m", 5}, {"n", 1}})), build(S(Family::Dihedral, {{"m", 5}}))));
  CHECK(iso_check_small(build(S(Family::ExtraspecialP3, {{"p", 2}, {"exponent", 4}})), d8));
  CHECK(iso_check_small(build(S(Family::FrobeniusPQ, {{"p", 2}, {"q", 3}})), build(S(Family::Dihedral, {{"m", 3}}))));
  CHECK_FALSE(iso_check_small(build(S(Family::ExtraspecialP3, {{"p", 3}, {"exponent", 3}})),
                              build(S(Family::ExtraspecialP3, {{"p", 3}, {"exponent", 9}}))));
  CHECK_THROWS_AS(iso_check_small(build(S(Family::Dihedral, {{"m", 40}})), build(S(Family::Dihedral, {{"m", 40}}))),
                  std::invalid_argument);

  const std::vector<GroupSpec> sixteen{S(Family::M16), S(Family::Z4SemidirectZ4), S(Family::D8StarZ4), S(Family::SG16_3),
                                       with_cyclic(S(Family::Dihedral, {{"m", 4}}), 2),
                                       with_cyclic(S(Family::GeneralizedQuaternion, {{"m", 2}}), 2)};
  for (std::size_t i = 0; i < sixteen.size(); ++i) {
    for (std::size_t j = i + 1; j < sixteen.size(); ++j) {
      CHECK_MESSAGE(!iso_check_small(build(sixteen[i]), build(sixteen[j])), sixteen[i].name() << " vs " << sixteen[j].name());
    }
  }
}

TEST_CASE("central quotients") {
  for (std::int64_t m = 3; m <= 8; ++m) {
    for (std::int64_t n = 1; n <= 2; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto q = quotient_by_center(build(S(Family::Metacyclic, {{"m", m}, {"n", n}})));
      const auto half = m % 2 ? m : m / 2;
      if (half == 2) {
        CHECK(q.order() == 4);
        CHECK(is_abelian(q));
        CHECK(order_profile(q)[2] == 3);
      } else {
        CHECK(iso_check_small(q, build(S(Family::Dihedral, {{"m", half}}))));
      }
    }
  }
  const auto sz = build(with_cyclic(S(Family::SuzukiSz2), 3));
  CHECK(iso_check_small(quotient_by_center(sz), build(S(Family::SuzukiSz2))));
}

TEST_CASE("subgroups, normality and direct products") {
  const auto g = build(S(Family::GL2, {{"q", 3}}));
  const auto z = center(g);
  CHECK(is_subgroup(g, z));
  CHECK(is_normal(g, z));
  for (Elem x = 0; x < g.order(); x += 7) {
    const auto c = centralizer(g, x);
    CHECK(is_subgroup(g, c));
    CHECK(std::includes(c.begin(), c.end(), z.begin(), z.end()));
  }
  const auto d6 = build(S(Family::Dihedral, {{"m", 3}}));
  const Elem reflection = 1;
  CHECK_FALSE(is_normal(d6, subgroup_generated(d6, std::vector<Elem>{reflection})));
  const auto p = direct_product(d6, build(S(Family::Cyclic, {{"k", 4}})));
  CHECK(p.order() == 24);
  CHECK(center(p).size() == 4);
  CHECK(commuting_pair_count(p) == commuting_pair_count(d6) * 16);
}

TEST_CASE("group laws on random elements") {
  std::mt19937 rng(20240611);
  for (const auto& spec : sample_specs()) {
    const auto g = build(spec);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
      const Elem x = pick(rng), y = pick(rng), w = pick(rng);
      ok &= g.mul(g.mul(x, y), w) == g.mul(x, g.mul(y, w));
      ok &= g.inv(g.mul(x, y)) == g.mul(g.inv(y), g.inv(x));
      ok &= g.mul(x, g.inv(x)) == g.identity();
      ok &= power(g, x, static_cast<std::int64_t>(element_order(g, x))) == g.identity();
      ok &= g.order() % element_order(g, x) == 0;
      ok &= centralizer(g, x).size() == centralizer(g, g.mul(g.mul(y, x), g.inv(y))).size();
    }
    CHECK_MESSAGE(ok, spec.name());
    const auto prof = order_profile(g);
    CHECK(std::accumulate(prof.begin(), prof.end(), std::size_t{0}) == g.order());
  }
}

TEST_CASE("Light's test agrees with the triple loop") {
  for (const auto& spec : sample_specs()) {
    const auto g = build(spec);
    if (g.order() > 64) continue;
    const auto t = table_of(g);
    CHECK(is_associative(t, g.order()));
    CHECK(brute_associative(t, g.order()));
  }
  // Affine quasigroups x*y = u x + v y (mod n) are Latin squares; associative iff u = v = 1.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 20;
    std::size_t u, v;
    do {
      u = 1 + rng() % (n - 1);
      v = 1 + rng() % (n - 1);
    } while (std::gcd(u, n) != 1 || std::gcd(v, n) != 1);
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((u * a + v * b) % n);
    CAPTURE(n);
    CAPTURE(u);
    CAPTURE(v);
    CHECK(is_associative(t, n) == brute_associative(t, n));
  }
  // Relabelling the entries of a group table by a random permutation keeps it Latin.
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = build(sample_specs()[trial % 6]);
    auto t = table_of(g);
    std::vector<Elem> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& e : t) e = perm[e];
    CHECK(is_associative(t, g.order()) == brute_associative(t, g.order()));
  }
}

TEST_CASE("GroupTable rejects non-groups") {
  const GroupSpec spec = S(Family::Cyclic, {{"k", 3}});
  CHECK_THROWS_AS(GroupTable({0, 1, 2, 1, 2, 0, 2, 0, 0}, {"e", "a", "b"}, spec), std::invalid_argument);
  // Latin square whose row identity is not a column identity.
  CHECK_THROWS_AS(GroupTable({0, 1, 2, 2, 0, 1, 1, 2, 0}, {"e", "a", "b"}, spec), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable({0, 1, 1, 0}, {"e", "e"}, spec), std::invalid_argument);
  CHECK_NOTHROW(GroupTable({0, 1, 2, 1, 2, 0, 2, 0, 1}, {"e", "a", "b"}, spec));
}

TEST_CASE("spec names and ordering") {
  CHECK(S(Family::Dihedral, {{"m", 3}}).name() == "Dihedral(m=3)");
  CHECK(with_cyclic(S(Family::Dihedral, {{"m", 4}}), 2).name() == "DirectProduct(Dihedral(m=4),Cyclic(k=2))");
  CHECK(spec_less(S(Family::Dihedral, {{"m", 3}}), S(Family::Dihedral, {{"m", 4}})));
  CHECK(parse_family("SuzukiSz2") == Family::SuzukiSz2);
  CHECK_FALSE(parse_family("Suzuki").has_value());
  for (auto f : all_families()) CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("D8StarZ4 is the central product") {
  const auto g = build(S(Family::D8StarZ4));
  CHECK(g.order() == 16);
  CHECK(center(g).size() == 4);
  CHECK(commutativity_degree(g) == Rational(5, 8));
}
