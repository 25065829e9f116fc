#pragma once

#include "ncg/graph.hpp"
#include "ncg/rational.hpp"

#include <string>
#include <vector>

namespace ncg {

struct SpectrumEntry {
  Rational value;
  std::size_t multiplicity = 0;
  bool operator==(const SpectrumEntry&) const = default;
};

/// Laplacian eigenvalues with multiplicities, ascending, no repeated values.
struct LaplacianSpectrum {
  std::vector<SpectrumEntry> entries;
  /// False when some eigenvalue could not be confirmed exactly; `warning` says why.
  bool certified = true;
  std::string warning;

  [[nodiscard]] std::size_t total_multiplicity() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] std::size_t multiplicity_of(const Rational& value) const;
  /// e.g. "{0, 4^3, 6^2}".
  [[nodiscard]] std::string to_string() const;

  /// Compares eigenvalues and multiplicities only.
  bool operator==(const LaplacianSpectrum& other) const { return entries == other.entries; }
};

/// Sorts and merges (value, multiplicity) pairs; drops zero multiplicities.
LaplacianSpectrum make_spectrum(std::vector<SpectrumEntry> raw);

/// Spectrum of the complement of a disjoint union of cliques a_1..a_c on
/// n = sum a_i vertices: {0^1} + {n^(c-1)} + {(n - a_i)^(a_i - 1)}.
LaplacianSpectrum spectrum_from_cliques(const CliqueDecomposition& d, std::size_t n);

struct NumericOptions {
  double tol = 1e-9;   // Jacobi off-diagonal threshold
  double snap = 1e-6;  // distance to an integer within which a value is snapped
  int maxSweeps = 100;
};

/// Largest graph spectrum_numeric accepts.
inline constexpr std::size_t kMaxNumericVertices = 2000;

/// Cyclic Jacobi on the Laplacian, then exact certification: every snapped
/// integer eigenvalue lambda of claimed multiplicity m must satisfy
/// nullity(L - lambda I) = m over the rationals. Anything else leaves the
/// spectrum uncertified with a warning.
LaplacianSpectrum spectrum_numeric(const SimpleGraph& g, const NumericOptions& options = {});

/// Raw Jacobi eigenvalues of the Laplacian, ascending.
std::vector<double> laplacian_eigenvalues(const SimpleGraph& g, const NumericOptions& options = {});

/// Rank over Q of a row-major integer matrix by fraction-free elimination.
std::size_t exact_rank(std::vector<BigInt> matrix, std::size_t rows, std::size_t cols);

/// Rank of L(g) - lambda I.
std::size_t laplacian_shift_rank(const SimpleGraph& g, const BigInt& lambda);

/// Sum of mult * |mu - 2E/V|. Throws std::invalid_argument unless the spectrum
/// has V eigenvalues in total, trace 2E, all values >= 0 and contains 0.
Rational laplacian_energy(const LaplacianSpectrum& s, std::size_t edges, std::size_t vertices);

bool is_l_integral(const LaplacianSpectrum& s);

}  // namespace ncg
