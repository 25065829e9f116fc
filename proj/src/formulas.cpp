#include "ncg/formulas.hpp"

#include "ncg/gf.hpp"

#include <algorithm>

namespace ncg {

namespace {

struct Entry {
  ResultId id;
  std::string_view name;
  std::vector<std::string> params;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {ResultId::Thm2_1, "Thm2.1", {"z"}},       {ResultId::Thm2_2, "Thm2.2", {"p", "z"}},
      {ResultId::Cor2_3, "Cor2.3", {"p"}},       {ResultId::Thm2_4, "Thm2.4", {"m", "z"}},
      {ResultId::Cor2_5, "Cor2.5", {"m", "n"}},  {ResultId::Cor2_6, "Cor2.6", {"m"}},
      {ResultId::Cor2_7, "Cor2.7", {"m"}},       {ResultId::Prop3_1, "Prop3.1", {"p", "q"}},
      {ResultId::Prop3_2, "Prop3.2", {"n"}},     {ResultId::Prop3_3, "Prop3.3", {"k"}},
      {ResultId::Prop3_4, "Prop3.4", {"q"}},     {ResultId::Prop3_5, "Prop3.5", {"n"}},
      {ResultId::Prop3_6, "Prop3.6", {"p", "n"}}, {ResultId::Prop4_1, "Prop4.1", {"z"}},
      {ResultId::Cor4_2, "Cor4.2", {"p", "z"}},  {ResultId::Prop4_3, "Prop4.3", {"z"}},
      {ResultId::PropPr1, "PropPr1", {"p", "z"}}, {ResultId::PropPr2, "PropPr2", {}},
      {ResultId::Prop4_4, "Prop4.4", {}},        {ResultId::ThmPlanar, "ThmPlanar", {}},
  };
  return entries;
}

const Entry& entry(ResultId id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw std::logic_error("unregistered result");
}

Rational q(const BigInt& v) { return Rational(v); }
BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
BigInt pw(std::int64_t b, std::int64_t e) { return ipow(big(b), static_cast<unsigned long>(e)); }

Rational frac(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

PaperValue single(Rational v) { return PaperValue{{std::move(v)}, false}; }

void require(bool ok, const PaperCase& c, const std::string& what) {
  if (!ok) throw HypothesisError(std::string(result_name(c.id)) + ": " + what);
}

bool is_prime_power(std::int64_t v) {
  if (v < 2) return false;
  std::int64_t p = 2;
  while (v % p != 0) ++p;
  while (v % p == 0) v /= p;
  return v == 1;
}

Rational thm24(const BigInt& m, const BigInt& z) {
  return frac((2 * m * m - 3 * m) * (m - 1) * z * z + m * (4 * m - 3) * z, 2 * m - 1);
}

Rational thm22(std::int64_t p, std::int64_t z) { return q(2 * big(p) * (p - 1) * z); }

LaplacianSpectrum spectrum_of(std::vector<std::pair<BigInt, BigInt>> raw) {
  std::vector<SpectrumEntry> out;
  for (auto& [value, mult] : raw) {
    if (mult < 0) throw std::logic_error("negative printed multiplicity");
    out.push_back({Rational(value), mult.get_ui()});
  }
  return make_spectrum(std::move(out));
}

// Displayed spectrum for G/Z = D_2m with |Z| = z.
LaplacianSpectrum thm24_spectrum(const BigInt& m, const BigInt& z) {
  return spectrum_of({{0, 1}, {m * z, (m - 1) * z - 1}, {2 * (m - 1) * z, m * z - m}, {(2 * m - 1) * z, m}});
}

// Displayed spectrum for G/Z = Z_p x Z_p.
LaplacianSpectrum thm22_spectrum(const BigInt& p, const BigInt& z) {
  return spectrum_of({{0, 1}, {(p * p - p) * z, (p * p - 1) * z - p - 1}, {(p * p - 1) * z, p}});
}

}  // namespace

std::string_view result_name(ResultId id) { return entry(id).name; }

std::optional<ResultId> parse_result(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::vector<ResultId> all_results() {
  std::vector<ResultId> out;
  for (const auto& e : registry()) out.push_back(e.id);
  return out;
}

std::vector<std::string> required_params(ResultId id) { return entry(id).params; }

std::int64_t PaperCase::param(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw HypothesisError(std::string(result_name(id)) + ": missing parameter " + key);
  return it->second;
}

bool PaperValue::contains(const Rational& x) const {
  return std::find(values.begin(), values.end(), x) != values.end();
}

Rational PaperValue::delta(const Rational& x) const {
  if (values.empty()) throw std::logic_error("empty printed value");
  Rational best = values.front() - x;
  for (const auto& v : values) {
    const Rational d = v - x;
    if (abs_value(d) < abs_value(best)) best = d;
  }
  return best;
}

std::string PaperValue::to_string() const {
  if (!isSet) return ncg::to_string(values.front());
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += ncg::to_string(values[i]);
  }
  return out + "}";
}

void check_hypotheses(const PaperCase& c) {
  for (const auto& key : required_params(c.id)) static_cast<void>(c.param(key));
  auto prime = [&](const std::string& key) { require(gf::is_prime(c.param(key)), c, key + " must be prime"); };
  auto positive_z = [&] { require(c.param("z") >= 1, c, "|Z(G)| must be >= 1"); };
  switch (c.id) {
    case ResultId::Thm2_1:
    case ResultId::Prop4_1:
    case ResultId::Prop4_3:
      positive_z();
      break;
    case ResultId::Thm2_2:
    case ResultId::Cor4_2:
    case ResultId::PropPr1:
      prime("p");
      positive_z();
      break;
    case ResultId::Cor2_3:
      prime("p");
      break;
    case ResultId::Thm2_4:
      require(c.param("m") >= 2, c, "m >= 2");
      positive_z();
      break;
    case ResultId::Cor2_5:
      require(c.param("m") > 2, c, "m > 2");
      require(c.param("n") >= 1, c, "n >= 1");
      break;
    case ResultId::Cor2_6:
      require(c.param("m") > 2, c, "m > 2");
      break;
    case ResultId::Cor2_7:
      require(c.param("m") >= 2, c, "m >= 2");
      break;
    case ResultId::Prop3_1:
      prime("p");
      prime("q");
      require((c.param("q") - 1) % c.param("p") == 0, c, "p must divide q - 1");
      break;
    case ResultId::Prop3_2:
      require(c.param("n") >= 4, c, "n >= 4");
      break;
    case ResultId::Prop3_3:
      require(c.param("k") >= 2, c, "k >= 2");
      break;
    case ResultId::Prop3_4:
      require(c.param("q") > 2 && is_prime_power(c.param("q")), c, "q must be a prime power > 2");
      break;
    case ResultId::Prop3_5:
      require(c.param("n") >= 2, c, "n >= 2");
      break;
    case ResultId::Prop3_6:
      prime("p");
      require(c.param("n") >= 1, c, "n >= 1");
      break;
    case ResultId::PropPr2:
    case ResultId::Prop4_4:
    case ResultId::ThmPlanar:
      break;
  }
}

PaperValue paper_value(const PaperCase& c) {
  check_hypotheses(c);
  switch (c.id) {
    case ResultId::Thm2_1: {
      const auto z = big(c.param("z"));
      return single((Rational(120, 19) * z + 30) * z);
    }
    case ResultId::Thm2_2:
    case ResultId::Cor4_2:
    case ResultId::PropPr1:
      return single(thm22(c.param("p"), c.param("z")));
    case ResultId::Cor2_3: {
      const auto p = big(c.param("p"));
      return single(q(2 * p * p * (p - 1)));
    }
    case ResultId::Thm2_4:
      return single(thm24(big(c.param("m")), big(c.param("z"))));
    case ResultId::Cor2_5: {
      const auto m = big(c.param("m"));
      const auto n = big(c.param("n"));
      if (c.param("m") % 2 != 0) return single(frac(m * (2 * m - 3) * (m - 1) * n * n + m * (4 * m - 3) * n, 2 * m - 1));
      return single(frac(m * (m - 2) * (m - 3) * n * n + m * (2 * m - 3) * n, m - 1));
    }
    case ResultId::Cor2_6: {
      const auto m = big(c.param("m"));
      if (c.param("m") % 2 != 0) return single(q(m * m));
      return single(frac(m * (m * m - 3 * m + 3), m - 1));
    }
    case ResultId::Cor2_7: {
      const auto m = big(c.param("m"));
      return single(frac(2 * m * (4 * m * m - 6 * m + 3), 2 * m - 1));
    }
    case ResultId::Prop3_1: {
      const auto p = big(c.param("p"));
      const auto qq = big(c.param("q"));
      return single(frac(2 * qq * (p * p - 1) * (qq - 1), p * qq - 1));
    }
    case ResultId::Prop3_2: {
      const auto n = c.param("n");
      return single(frac(pw(2, 3 * n - 3) - pw(2, 2 * n) + 3 * pw(2, n), pw(2, n - 1) - 1));
    }
    case ResultId::Prop3_3: {
      const auto k = c.param("k");
      const BigInt num = 3 * pw(2, 6 * k) - 2 * pw(2, 5 * k) - 7 * pw(2, 4 * k) + pw(2, 3 * k) + 4 * pw(2, 2 * k) + pw(2, k);
      return single(frac(num, pw(2, 3 * k) - pw(2, k) - 1));
    }
    case ResultId::Prop3_4: {
      const auto v = c.param("q");
      auto Q = [&](int e) { return pw(v, e); };
      const BigInt num = Q(9) - 2 * Q(8) - Q(7) + 2 * Q(6) + 2 * Q(5) + Q(4) - 4 * Q(3) + 2 * Q(2) + Q(1);
      return single(frac(num, Q(4) - Q(3) - Q(2) + 1));
    }
    case ResultId::Prop3_5: {
      const auto n = c.param("n");
      return single(q(pw(2, 2 * n + 1) - pw(2, n + 2)));
    }
    case ResultId::Prop3_6: {
      const auto p = c.param("p");
      const auto n = c.param("n");
      return single(q(2 * (pw(p, 3 * n) - pw(p, 2 * n))));
    }
    case ResultId::Prop4_1:
      return single(q(4 * big(c.param("z"))));
    case ResultId::Prop4_3: {
      const auto z = big(c.param("z"));
      return PaperValue{{q(12 * z), frac(18 * z * z + 27 * z, 5)}, true};
    }
    case ResultId::PropPr2:
      return PaperValue{{Rational(9), Rational(28, 3), Rational(25), Rational(126, 5)}, true};
    case ResultId::Prop4_4:
      return single(Rational(16));
    case ResultId::ThmPlanar:
      return PaperValue{{Rational(28, 3), Rational(9)}, true};
  }
  throw std::logic_error("unhandled result");
}

std::optional<LaplacianSpectrum> paper_spectrum(const PaperCase& c) {
  check_hypotheses(c);
  switch (c.id) {
    case ResultId::Thm2_1: {
      const auto z = big(c.param("z"));
      return spectrum_of({{0, 1}, {15 * z, 4 * z - 1}, {16 * z, 15 * z - 5}, {19 * z, 5}});
    }
    case ResultId::Thm2_2:
    case ResultId::Cor4_2:
    case ResultId::PropPr1:
      return thm22_spectrum(big(c.param("p")), big(c.param("z")));
    case ResultId::Cor2_3:
      return thm22_spectrum(big(c.param("p")), big(c.param("p")));
    case ResultId::Prop4_1:
      return thm22_spectrum(2, big(c.param("z")));
    case ResultId::Prop4_4:
      return thm22_spectrum(2, 4);
    case ResultId::Thm2_4:
      return thm24_spectrum(big(c.param("m")), big(c.param("z")));
    case ResultId::Cor2_5: {
      const auto m = c.param("m");
      const auto n = c.param("n");
      if (m % 2 != 0) return thm24_spectrum(big(m), big(n));
      return thm24_spectrum(big(m / 2), big(2 * n));
    }
    case ResultId::Cor2_6: {
      const auto m = c.param("m");
      if (m % 2 != 0) return thm24_spectrum(big(m), 1);
      return thm24_spectrum(big(m / 2), 2);
    }
    case ResultId::Cor2_7:
      return thm24_spectrum(big(c.param("m")), 2);
    case ResultId::Prop3_1: {
      const auto p = big(c.param("p"));
      const auto qq = big(c.param("q"));
      return spectrum_of({{0, 1}, {p * qq - qq, qq - 2}, {p * qq - p, p * qq - 2 * qq}, {p * qq - 1, qq}});
    }
    case ResultId::Prop3_2: {
      const auto n = c.param("n");
      return spectrum_of({{0, 1},
                          {pw(2, n - 1), pw(2, n - 1) - 3},
                          {pw(2, n) - 4, pw(2, n - 2)},
                          {pw(2, n) - 2, pw(2, n - 2)}});
    }
    case ResultId::Prop3_3: {
      const auto k = c.param("k");
      const BigInt t3 = pw(2, 3 * k);
      return spectrum_of({{0, 1},
                          {t3 - pw(2, k + 1) - 1, pw(2, 3 * k - 1) - pw(2, 2 * k) + pw(2, k - 1)},
                          {t3 - pw(2, k + 1), pw(2, 2 * k) - pw(2, k) - 2},
                          {t3 - pw(2, k + 1) + 1, pw(2, 3 * k - 1) - pw(2, 2 * k) - 3 * pw(2, k - 1)},
                          {t3 - pw(2, k) - 1, pw(2, 2 * k) + pw(2, k)}});
    }
    case ResultId::Prop3_4: {
      const auto v = c.param("q");
      auto Q = [&](int e) { return pw(v, e); };
      return spectrum_of({{0, 1},
                          {Q(4) - Q(3) - 2 * Q(2) + 2 * Q(1), Q(3) - Q(2) - 2 * Q(1)},
                          {Q(4) - Q(3) - 2 * Q(2) + Q(1) + 1, (Q(4) - 2 * Q(3) + Q(1)) / 2},
                          {Q(4) - Q(3) - 2 * Q(2) + 3 * Q(1) - 1, (Q(4) - 2 * Q(3) - 2 * Q(2) + Q(1)) / 2},
                          {Q(4) - Q(3) - Q(2) + 1, Q(2) + Q(1)}});
    }
    case ResultId::Prop3_5: {
      const auto n = c.param("n");
      return spectrum_of({{0, 1},
                          {pw(2, 2 * n) - pw(2, n + 1), (pw(2, n) - 1) * (pw(2, n) - 1)},
                          {pw(2, 2 * n) - pw(2, n), pw(2, n) - 2}});
    }
    case ResultId::Prop3_6: {
      const auto p = c.param("p");
      const auto n = c.param("n");
      return spectrum_of({{0, 1},
                          {pw(p, 3 * n) - pw(p, 2 * n), pw(p, 3 * n) - 2 * pw(p, n) - 1},
                          {pw(p, 3 * n) - pw(p, n), pw(p, n)}});
    }
    case ResultId::Prop4_3:
    case ResultId::PropPr2:
    case ResultId::ThmPlanar:
      return std::nullopt;
  }
  return std::nullopt;
}

Rational spectrum_energy(const LaplacianSpectrum& s) {
  const auto count = s.total_multiplicity();
  if (count == 0) return Rational(0);
  const Rational mean = s.trace() / Rational(static_cast<unsigned long>(count));
  Rational total = 0;
  for (const auto& e : s.entries) total += abs_value(e.value - mean) * static_cast<unsigned long>(e.multiplicity);
  total.canonicalize();
  return total;
}

std::optional<Rational> ground_truth_hint(const PaperCase& c) {
  const auto spectrum = paper_spectrum(c);
  if (!spectrum) return std::nullopt;
  const auto implied = spectrum_energy(*spectrum);
  if (paper_value(c).contains(implied)) return std::nullopt;
  return implied;
}

}  // namespace ncg
