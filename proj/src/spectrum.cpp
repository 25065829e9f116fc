#include "ncg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ncg {

std::size_t LaplacianSpectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

Rational LaplacianSpectrum::trace() const {
  Rational total = 0;
  for (const auto& e : entries) total += e.value * static_cast<unsigned long>(e.multiplicity);
  return total;
}

std::size_t LaplacianSpectrum::multiplicity_of(const Rational& value) const {
  for (const auto& e : entries) {
    if (e.value == value) return e.multiplicity;
  }
  return 0;
}

std::string LaplacianSpectrum::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += to_display(entries[i].value);
    if (entries[i].multiplicity != 1) out += "^" + std::to_string(entries[i].multiplicity);
  }
  return out + "}";
}

LaplacianSpectrum make_spectrum(std::vector<SpectrumEntry> raw) {
  std::map<Rational, std::size_t> merged;
  for (auto& e : raw) {
    if (e.multiplicity > 0) merged[e.value] += e.multiplicity;
  }
  LaplacianSpectrum s;
  for (auto& [value, mult] : merged) s.entries.push_back({value, mult});
  return s;
}

LaplacianSpectrum spectrum_from_cliques(const CliqueDecomposition& d, std::size_t n) {
  if (d.vertex_count() != n) throw std::invalid_argument("clique sizes do not sum to the vertex count");
  if (n == 0) return {};
  std::vector<SpectrumEntry> raw;
  raw.push_back({Rational(0), 1});
  raw.push_back({Rational(static_cast<unsigned long>(n)), d.cliqueSizes.size() - 1});
  for (auto a : d.cliqueSizes) raw.push_back({Rational(static_cast<unsigned long>(n - a)), a - 1});
  return make_spectrum(std::move(raw));
}

std::vector<double> laplacian_eigenvalues(const SimpleGraph& g, const NumericOptions& options) {
  const auto n = g.vertex_count();
  if (n > kMaxNumericVertices) throw std::invalid_argument("graph too large for the dense eigensolver");
  std::vector<double> a(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    a[u * n + u] = static_cast<double>(g.degree(u));
    for (std::size_t v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) a[u * n + v] = -1.0;
    }
  }
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(2.0 * s);
  };
  for (int sweep = 0; sweep < options.maxSweeps && off_norm() > options.tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = np;
          a[k * n + q] = a[q * n + k] = nq;
        }
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t exact_rank(std::vector<BigInt> m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows * cols) throw std::invalid_argument("matrix size mismatch");
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
    }
    const BigInt& p = m[rank * cols + col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt f = m[i * cols + col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_ptr x = m[i * cols + j].get_mpz_t();
        mpz_mul(x, x, p.get_mpz_t());
        mpz_submul(x, f.get_mpz_t(), m[rank * cols + j].get_mpz_t());
        if (prev != 1) mpz_divexact(x, x, prev.get_mpz_t());
      }
      m[i * cols + col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t laplacian_shift_rank(const SimpleGraph& g, const BigInt& lambda) {
  const auto n = g.vertex_count();
  std::vector<BigInt> m(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) {
        m[u * n + v] = BigInt(static_cast<unsigned long>(g.degree(u))) - lambda;
      } else if (g.adjacent(u, v)) {
        m[u * n + v] = -1;
      }
    }
  }
  return exact_rank(std::move(m), n, n);
}

LaplacianSpectrum spectrum_numeric(const SimpleGraph& g, const NumericOptions& options) {
  const auto values = laplacian_eigenvalues(g, options);
  const auto n = values.size();
  std::vector<SpectrumEntry> raw;
  std::vector<std::pair<long, std::size_t>> integers;
  bool all_integer = true;
  for (std::size_t i = 0; i < n;) {
    const double v = values[i];
    const double r = std::round(v);
    std::size_t j = i;
    if (std::abs(v - r) <= options.snap) {
      while (j < n && std::abs(values[j] - r) <= options.snap) ++j;
      integers.emplace_back(static_cast<long>(r), j - i);
      raw.push_back({Rational(static_cast<long>(r)), j - i});
    } else {
      j = i + 1;
      while (j < n && values[j] - values[j - 1] <= options.snap) ++j;
      all_integer = false;
      raw.push_back({Rational(v), j - i});
    }
    i = j;
  }
  auto s = make_spectrum(std::move(raw));
  if (!all_integer) {
    s.certified = false;
    s.warning = "non-integer eigenvalues are numeric only";
    return s;
  }
  for (const auto& [lambda, mult] : integers) {
    const auto rank = laplacian_shift_rank(g, BigInt(lambda));
    if (n - rank != mult) {
      s.certified = false;
      s.warning = "eigenvalue " + std::to_string(lambda) + ": claimed multiplicity " + std::to_string(mult) +
                  ", exact nullity " + std::to_string(n - rank);
      return s;
    }
  }
  return s;
}

Rational laplacian_energy(const LaplacianSpectrum& s, std::size_t edges, std::size_t vertices) {
  if (vertices == 0) throw std::invalid_argument("graph has no vertices");
  if (s.total_multiplicity() != vertices) throw std::invalid_argument("multiplicities do not sum to the vertex count");
  if (s.trace() != Rational(static_cast<unsigned long>(2 * edges))) {
    throw std::invalid_argument("spectrum trace differs from twice the edge count");
  }
  if (s.entries.front().value != 0) throw std::invalid_argument("smallest Laplacian eigenvalue must be 0");
  const Rational mean(static_cast<unsigned long>(2 * edges), static_cast<unsigned long>(vertices));
  Rational total = 0;
  for (const auto& e : s.entries) total += abs_value(e.value - mean) * static_cast<unsigned long>(e.multiplicity);
  total.canonicalize();
  return total;
}

bool is_l_integral(const LaplacianSpectrum& s) {
  return std::all_of(s.entries.begin(), s.entries.end(), [](const SpectrumEntry& e) { return is_integral(e.value); });
}

}  // namespace ncg
