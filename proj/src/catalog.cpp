#include "ncg/catalog.hpp"

#include "ncg/gf.hpp"
#include "ncg/todd_coxeter.hpp"

#include <array>
#include <functional>

namespace ncg {

namespace {

std::int64_t ipow64(std::int64_t b, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

std::int64_t modpow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t out = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) out = out * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return out;
}

// q = p^n with p prime, or nullopt.
std::optional<std::pair<int, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), n};
}

std::string power_label(const std::string& gen, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return gen;
  return gen + "^" + std::to_string(e);
}

// Z_m x| Z_k with top * base * top^-1 = base^r and top^k = base^c. Element
// base^i top^j sits at index i * k + j.
GroupTable semidirect(std::int64_t m, std::int64_t k, std::int64_t r, std::int64_t c, const std::string& base,
                      const std::string& top, GroupSpec spec) {
  const auto n = static_cast<std::size_t>(m * k);
  if (n > kMaxGroupOrder) throw SpecError(spec.name() + ": order exceeds " + std::to_string(kMaxGroupOrder));
  r = ((r % m) + m) % m;
  std::vector<std::int64_t> rpow(static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j) rpow[j] = modpow(r, j, m);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < k; ++j) {
      const auto x = static_cast<std::size_t>(i * k + j);
      const auto a = power_label(base, i);
      const auto b = power_label(top, j);
      labels[x] = a.empty() && b.empty() ? "1" : a.empty() ? b : b.empty() ? a : a + " " + b;
      for (std::int64_t s = 0; s < m; ++s) {
        for (std::int64_t t = 0; t < k; ++t) {
          std::int64_t e = (i + s * rpow[j]) % m;
          std::int64_t jt = j + t;
          if (jt >= k) {
            e = (e + c) % m;
            jt -= k;
          }
          mul[x * n + static_cast<std::size_t>(s * k + t)] = static_cast<Elem>(e * k + jt);
        }
      }
    }
  }
  return GroupTable(std::move(mul), std::move(labels), std::move(spec));
}

GroupTable cyclic(std::int64_t k, GroupSpec spec) {
  const auto n = static_cast<std::size_t>(k);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : power_label("g", static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return GroupTable(std::move(mul), std::move(labels), std::move(spec));
}

// Builds a table from explicit coordinates: elements are listed in order and
// `product` maps two element positions to the position of their product.
GroupTable tabulate(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& product,
                    std::vector<std::string> labels, GroupSpec spec) {
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>(product(a, b));
  }
  return GroupTable(std::move(mul), std::move(labels), std::move(spec));
}

GroupTable matrix_group(const gf::Field& f, bool unimodular, GroupSpec spec) {
  const int q = f.size();
  using Mat = std::array<int, 4>;
  std::vector<Mat> elems;
  std::vector<std::int32_t> position(static_cast<std::size_t>(q) * q * q * q, -1);
  auto code = [q](const Mat& m) { return ((static_cast<std::size_t>(m[0]) * q + m[1]) * q + m[2]) * q + m[3]; };
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        for (int d = 0; d < q; ++d) {
          const int det = f.sub(f.mul(a, d), f.mul(b, c));
          if (unimodular ? det != 1 : det == 0) continue;
          position[code({a, b, c, d})] = static_cast<std::int32_t>(elems.size());
          elems.push_back({a, b, c, d});
        }
      }
    }
  }
  if (elems.size() > kMaxGroupOrder) throw SpecError(spec.name() + ": order exceeds " + std::to_string(kMaxGroupOrder));
  std::vector<std::string> labels;
  for (const auto& m : elems) {
    labels.push_back("[" + f.label(m[0]) + "," + f.label(m[1]) + ";" + f.label(m[2]) + "," + f.label(m[3]) + "]");
  }
  return tabulate(
      elems.size(),
      [&](std::size_t i, std::size_t j) {
        const auto& x = elems[i];
        const auto& y = elems[j];
        const Mat z{f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
                    f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
        return static_cast<std::size_t>(position[code(z)]);
      },
      std::move(labels), std::move(spec));
}

// U(a, b) U(a', b') = U(a + a', b + b' + a' frob(a)) over GF(2^n).
GroupTable hanaki_u(const gf::Field& f, GroupSpec spec) {
  const auto q = static_cast<std::size_t>(f.size());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      labels.push_back("U(" + f.label(static_cast<int>(a)) + "," + f.label(static_cast<int>(b)) + ")");
    }
  }
  return tabulate(
      q * q,
      [&](std::size_t x, std::size_t y) {
        const int a = static_cast<int>(x / q), b = static_cast<int>(x % q);
        const int a2 = static_cast<int>(y / q), b2 = static_cast<int>(y % q);
        const int na = f.add(a, a2);
        const int nb = f.add(f.add(b, b2), f.mul(a2, f.frobenius(a)));
        return static_cast<std::size_t>(na) * q + static_cast<std::size_t>(nb);
      },
      std::move(labels), std::move(spec));
}

// V(a, b, c) V(a', b', c') = V(a + a', b + b' + c a', c + c').
GroupTable hanaki_v(const gf::Field& f, GroupSpec spec) {
  const auto q = static_cast<std::size_t>(f.size());
  if (q * q * q > kMaxGroupOrder) throw SpecError(spec.name() + ": order exceeds " + std::to_string(kMaxGroupOrder));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < q * q * q; ++x) {
    labels.push_back("V(" + f.label(static_cast<int>(x / (q * q))) + "," + f.label(static_cast<int>(x / q % q)) +
                     "," + f.label(static_cast<int>(x % q)) + ")");
  }
  return tabulate(
      q * q * q,
      [&](std::size_t x, std::size_t y) {
        const int a = static_cast<int>(x / (q * q)), b = static_cast<int>(x / q % q), c = static_cast<int>(x % q);
        const int a2 = static_cast<int>(y / (q * q)), b2 = static_cast<int>(y / q % q),
                  c2 = static_cast<int>(y % q);
        const auto na = static_cast<std::size_t>(f.add(a, a2));
        const auto nb = static_cast<std::size_t>(f.add(f.add(b, b2), f.mul(c, a2)));
        const auto nc = static_cast<std::size_t>(f.add(c, c2));
        return (na * q + nb) * q + nc;
      },
      std::move(labels), std::move(spec));
}

GroupTable with_spec(const GroupTable& g, GroupSpec spec) {
  std::vector<Elem> mul;
  mul.reserve(g.order() * g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    mul.insert(mul.end(), r.begin(), r.end());
  }
  return GroupTable(std::move(mul), g.labels(), std::move(spec));
}

void require(bool ok, const GroupSpec& spec, const std::string& what) {
  if (!ok) throw SpecError(spec.name() + ": " + what);
}

Presentation presentation_of(const std::vector<std::string>& gens, const std::vector<std::string>& rels,
                             std::int64_t order) {
  return make_presentation(gens, rels, static_cast<std::size_t>(4 * order));
}

}  // namespace

std::int64_t frobenius_action_exponent(std::int64_t p, std::int64_t q) {
  for (std::int64_t r = 2; r < q; ++r) {
    if (modpow(r, p, q) == 1) return r;
  }
  throw SpecError("no element of multiplicative order " + std::to_string(p) + " modulo " + std::to_string(q));
}

void validate(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Cyclic:
      require(spec.param("k") >= 1, spec, "k must be >= 1");
      break;
    case Family::Dihedral:
      require(spec.param("m") >= 3, spec, "m must be >= 3");
      break;
    case Family::GeneralizedQuaternion:
      require(spec.param("m") >= 2, spec, "m must be >= 2");
      break;
    case Family::Quasidihedral:
      require(spec.param("n") >= 4, spec, "n must be >= 4");
      require(spec.param("n") <= 12, spec, "n must be <= 12");
      break;
    case Family::Metacyclic:
      require(spec.param("m") > 2, spec, "m must be > 2");
      require(spec.param("n") >= 1, spec, "n must be >= 1");
      break;
    case Family::FrobeniusPQ: {
      const auto p = spec.param("p"), q = spec.param("q");
      require(gf::is_prime(p) && gf::is_prime(q), spec, "p and q must be prime");
      require((q - 1) % p == 0, spec, "p must divide q - 1");
      break;
    }
    case Family::PSL2:
      require(spec.param("k") >= 2, spec, "k must be >= 2");
      require(spec.param("k") <= 4, spec, "k must be <= 4 (order limit)");
      break;
    case Family::GL2: {
      const auto q = spec.param("q");
      require(q > 2 && prime_power(q).has_value(), spec, "q must be a prime power > 2");
      require(q <= 8, spec, "q must be <= 8 (order limit)");
      break;
    }
    case Family::HanakiU:
      require(spec.param("n") >= 2, spec, "n must be >= 2");
      require(spec.param("n") <= 6, spec, "n must be <= 6 (order limit)");
      break;
    case Family::HanakiV: {
      const auto p = spec.param("p"), n = spec.param("n");
      require(gf::is_prime(p), spec, "p must be prime");
      require(n >= 1, spec, "n must be >= 1");
      require(ipow64(p, static_cast<int>(3 * std::min<std::int64_t>(n, 8))) <= static_cast<std::int64_t>(kMaxGroupOrder),
              spec, "order exceeds limit");
      break;
    }
    case Family::ExtraspecialP3: {
      const auto p = spec.param("p"), e = spec.param("exponent");
      require(gf::is_prime(p), spec, "p must be prime");
      require(e == p || e == p * p, spec, "exponent must be p or p^2");
      require(!(p == 2 && e == 2), spec, "no non-abelian group of order 8 has exponent 2");
      require(p <= 17, spec, "order exceeds limit");
      break;
    }
    case Family::DirectProduct:
      require(spec.factors.size() == 2, spec, "direct product needs exactly two factors");
      validate(spec.factors[0]);
      validate(spec.factors[1]);
      break;
    case Family::Presentation:
      require(spec.presentation.has_value(), spec, "presentation missing");
      break;
    case Family::SuzukiSz2:
    case Family::M16:
    case Family::Z4SemidirectZ4:
    case Family::D8StarZ4:
    case Family::SG16_3:
      break;
  }
  if (spec.family != Family::DirectProduct) require(spec.factors.empty(), spec, "unexpected factors");
}

std::optional<std::int64_t> expected_order(const GroupSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Cyclic:
      return spec.param("k");
    case Family::Dihedral:
      return 2 * spec.param("m");
    case Family::GeneralizedQuaternion:
      return 4 * spec.param("m");
    case Family::Quasidihedral:
      return ipow64(2, static_cast<int>(spec.param("n")));
    case Family::Metacyclic:
      return 2 * spec.param("m") * spec.param("n");
    case Family::FrobeniusPQ:
      return spec.param("p") * spec.param("q");
    case Family::PSL2: {
      const auto t = ipow64(2, static_cast<int>(spec.param("k")));
      return t * (t * t - 1);
    }
    case Family::GL2: {
      const auto q = spec.param("q");
      return (q * q - 1) * (q * q - q);
    }
    case Family::HanakiU:
      return ipow64(4, static_cast<int>(spec.param("n")));
    case Family::HanakiV:
      return ipow64(spec.param("p"), static_cast<int>(3 * spec.param("n")));
    case Family::ExtraspecialP3:
      return ipow64(spec.param("p"), 3);
    case Family::SuzukiSz2:
      return 20;
    case Family::M16:
    case Family::Z4SemidirectZ4:
    case Family::D8StarZ4:
    case Family::SG16_3:
      return 16;
    case Family::DirectProduct: {
      const auto a = expected_order(spec.factors[0]);
      const auto b = expected_order(spec.factors[1]);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case Family::Presentation:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Presentation> catalog_presentation(const GroupSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::SuzukiSz2:
      return presentation_of({"a", "b"}, {"a^5", "b^4", "b^-1 a b a^-2"}, 20);
    case Family::Quasidihedral: {
      const auto n = static_cast<int>(spec.param("n"));
      const auto big = ipow64(2, n - 1);
      const auto r = ipow64(2, n - 2) - 1;
      return presentation_of({"a", "b"},
                             {"a^" + std::to_string(big), "b^2", "b a b^-1 a^-" + std::to_string(r)}, 2 * big);
    }
    case Family::M16:
      return presentation_of({"a", "b"}, {"a^8", "b^2", "b a b a^-5"}, 16);
    case Family::SG16_3:
      return presentation_of({"a", "b"}, {"a^4", "b^4", "abab", "ab^-1ab^-1"}, 16);
    case Family::GeneralizedQuaternion: {
      const auto m = spec.param("m");
      return presentation_of({"x", "y"},
                             {"y^" + std::to_string(2 * m), "x^2 y^-" + std::to_string(m), "x y x^-1 y"}, 4 * m);
    }
    case Family::Dihedral: {
      const auto m = spec.param("m");
      return presentation_of({"a", "b"}, {"a^" + std::to_string(m), "b^2", "b a b^-1 a"}, 2 * m);
    }
    case Family::Presentation:
      return spec.presentation;
    default:
      return std::nullopt;
  }
}

GroupTable build(const GroupSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Cyclic:
      return cyclic(spec.param("k"), spec);
    case Family::Dihedral: {
      const auto m = spec.param("m");
      return semidirect(m, 2, m - 1, 0, "a", "b", spec);
    }
    case Family::GeneralizedQuaternion: {
      const auto m = spec.param("m");
      return semidirect(2 * m, 2, 2 * m - 1, m, "y", "x", spec);
    }
    case Family::Quasidihedral: {
      const auto n = static_cast<int>(spec.param("n"));
      return semidirect(ipow64(2, n - 1), 2, ipow64(2, n - 2) - 1, 0, "a", "b", spec);
    }
    case Family::Metacyclic: {
      const auto m = spec.param("m");
      return semidirect(m, 2 * spec.param("n"), m - 1, 0, "a", "b", spec);
    }
    case Family::SuzukiSz2:
      // b^-1 a b = a^2 is equivalent to b a b^-1 = a^3.
      return semidirect(5, 4, 3, 0, "a", "b", spec);
    case Family::FrobeniusPQ: {
      const auto p = spec.param("p"), q = spec.param("q");
      return semidirect(q, p, frobenius_action_exponent(p, q), 0, "a", "b", spec);
    }
    case Family::M16:
      return semidirect(8, 2, 5, 0, "a", "b", spec);
    case Family::Z4SemidirectZ4:
      return semidirect(4, 4, 3, 0, "a", "b", spec);
    case Family::ExtraspecialP3: {
      const auto p = spec.param("p");
      if (spec.param("exponent") == p * p) return semidirect(p * p, p, 1 + p, 0, "a", "b", spec);
      return hanaki_v(gf::Field(gf::find_irreducible(static_cast<int>(p), 1)), spec);
    }
    case Family::PSL2:
      // In characteristic 2, PSL(2, 2^k) = SL(2, 2^k).
      return matrix_group(gf::Field(gf::find_irreducible(2, static_cast<int>(spec.param("k")))), true, spec);
    case Family::GL2: {
      const auto [p, n] = *prime_power(spec.param("q"));
      return matrix_group(gf::Field(gf::find_irreducible(p, n)), false, spec);
    }
    case Family::HanakiU:
      return hanaki_u(gf::Field(gf::find_irreducible(2, static_cast<int>(spec.param("n")))), spec);
    case Family::HanakiV:
      return hanaki_v(gf::Field(gf::find_irreducible(static_cast<int>(spec.param("p")),
                                                     static_cast<int>(spec.param("n")))),
                      spec);
    case Family::D8StarZ4: {
      const auto d8 = build(GroupSpec::make(Family::Dihedral, {{"m", 4}}));
      const auto z4 = build(GroupSpec::make(Family::Cyclic, {{"k", 4}}));
      const auto prod = direct_product(d8, z4);
      // a^2 is index 4 in D8 (a^i b^j -> 2i + j); c^2 is index 2 in Z4.
      const Elem glue = 4 * 4 + 2;
      return with_spec(quotient_by_normal(prod, ElementSet{prod.identity(), glue}), spec);
    }
    case Family::SG16_3:
      return with_spec(todd_coxeter(*catalog_presentation(spec)), spec);
    case Family::DirectProduct:
      return direct_product(build(spec.factors[0]), build(spec.factors[1]));
    case Family::Presentation:
      return todd_coxeter(*spec.presentation);
  }
  throw SpecError("unknown family");
}

}  // namespace ncg
