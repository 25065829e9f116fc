#include "ncg/gf.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace ncg;
using namespace ncg::gf;

namespace {

std::vector<std::pair<int, int>> small_fields() {
  return {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {2, 5}, {7, 2}, {2, 6}, {3, 3}};
}

FieldElement x_of(const FieldSpec& s) { return from_index(s, s.p); }

}  // namespace

TEST_CASE("find_irreducible picks the smallest monic modulus") {
  CHECK(find_irreducible(2, 1).modulus == std::vector<int>{0, 1});
  CHECK(find_irreducible(3, 1).modulus == std::vector<int>{0, 1});
  CHECK(find_irreducible(2, 2).modulus == std::vector<int>{1, 1, 1});
  CHECK(find_irreducible(2, 2).modulus_string() == "x^2+x+1");
  CHECK(find_irreducible(2, 3).modulus == std::vector<int>{1, 0, 1, 1});
  CHECK(find_irreducible(3, 2).modulus == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(find_irreducible(4, 2), std::invalid_argument);
}

TEST_CASE("FieldSpec::make validates its modulus") {
  CHECK_NOTHROW(FieldSpec::make(2, {1, 1, 1}));
  CHECK_THROWS(FieldSpec::make(2, {1, 0, 1}));  // (x+1)^2
  CHECK_THROWS(FieldSpec::make(2, {1, 1, 0}));  // not monic
  CHECK_THROWS(FieldSpec::make(6, {0, 1}));
}

TEST_CASE("irreducibility by exhaustive count of quadratics and cubics over GF(2)") {
  int quad = 0, cubic = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const std::vector<int> q{a, b, 1};
      quad += is_irreducible(2, q);
      for (int c = 0; c < 2; ++c) {
        const std::vector<int> k{a, b, c, 1};
        cubic += is_irreducible(2, k);
      }
    }
  }
  CHECK(quad == 1);
  CHECK(cubic == 2);
}

TEST_CASE("GF(4) enumeration and products") {
  const auto s = find_irreducible(2, 2);
  std::vector<std::string> names;
  for (const auto& a : enumerate(s)) names.push_back(to_string(a));
  CHECK(names == std::vector<std::string>{"0", "1", "x", "x+1"});
  const auto x = x_of(s);
  CHECK(to_string(mul(x, x, s)) == "x+1");
  CHECK(to_string(frobenius(x, s)) == "x+1");
  CHECK(enumerate(find_irreducible(2, 1)).size() == 2);
}

TEST_CASE("GF(3) inverse and zero division") {
  const auto s = find_irreducible(3, 1);
  CHECK(inv(constant(s, 2), s) == constant(s, 2));
  CHECK_THROWS_AS(inv(zero(s), s), std::domain_error);
  CHECK(pow(constant(s, 2), -1, s) == constant(s, 2));
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (auto [p, n] : small_fields()) {
    const auto s = find_irreducible(p, n);
    CAPTURE(s.order());
    const auto all = enumerate(s);
    REQUIRE(all.size() == static_cast<std::size_t>(s.order()));
    std::set<std::vector<int>> distinct;
    for (const auto& a : all) distinct.insert(a.coeffs());
    CHECK(distinct.size() == all.size());
    bool ok = true;
    for (const auto& a : all) {
      ok &= add(a, neg(a, s), s) == zero(s);
      ok &= mul(a, one(s), s) == a;
      if (!a.is_zero()) {
        ok &= mul(a, inv(a, s), s) == one(s);
        ok &= pow(a, s.order() - 1, s) == one(s);
      }
      for (const auto& b : all) {
        ok &= mul(a, b, s) == mul(b, a, s);
        ok &= frobenius(add(a, b, s), s) == add(frobenius(a, s), frobenius(b, s), s);
        ok &= frobenius(mul(a, b, s), s) == mul(frobenius(a, s), frobenius(b, s), s);
        if (s.order() <= 27) {
          for (const auto& c : all) {
            ok &= mul(mul(a, b, s), c, s) == mul(a, mul(b, c, s), s);
            ok &= mul(a, add(b, c, s), s) == add(mul(a, b, s), mul(a, c, s), s);
          }
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (auto [p, n] : small_fields()) {
    const auto s = find_irreducible(p, n);
    const auto q1 = s.order() - 1;
    bool generator = false;
    for (const auto& a : enumerate(s)) {
      if (a.is_zero()) continue;
      std::int64_t ord = 1;
      for (auto t = a; !(t == one(s)); t = mul(t, a, s)) ++ord;
      generator |= ord == q1;
    }
    CHECK_MESSAGE(generator, "GF(" << s.order() << ")");
  }
}

TEST_CASE("indexed Field tables agree with polynomial arithmetic") {
  for (auto [p, n] : small_fields()) {
    const auto s = find_irreducible(p, n);
    const Field f(s);
    const auto q = f.size();
    bool ok = true;
    for (int a = 0; a < q; ++a) {
      ok &= to_index(s, from_index(s, a)) == a;
      ok &= f.frobenius(a) == to_index(s, frobenius(from_index(s, a), s));
      if (a) ok &= f.mul(a, f.inv(a)) == 1;
      for (int b = 0; b < q; ++b) {
        ok &= f.add(a, b) == to_index(s, add(from_index(s, a), from_index(s, b), s));
        ok &= f.mul(a, b) == to_index(s, mul(from_index(s, a), from_index(s, b), s));
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("prime-field Frobenius is the identity") {
  const auto s = find_irreducible(2, 1);
  for (const auto& a : enumerate(s)) CHECK(frobenius(a, s) == a);
}
