#pragma once

// Arithmetic in GF(p^n) over a polynomial basis.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncg::gf {

bool is_prime(std::int64_t value);

/// Monic irreducible modulus for GF(p^n). Coefficients are stored constant term
/// first, so `modulus.size() == n + 1` and `modulus.back() == 1`.
struct FieldSpec {
  int p = 2;
  int n = 1;
  std::vector<int> modulus{0, 1};

  /// Validates primality of p, monicity and irreducibility of the modulus.
  static FieldSpec make(int p, std::vector<int> modulus);

  [[nodiscard]] std::int64_t order() const;
  [[nodiscard]] std::string modulus_string() const;

  bool operator==(const FieldSpec&) const = default;
};

/// A field element as n coefficients in [0, p), constant term first.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  [[nodiscard]] const std::vector<int>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;

  bool operator==(const FieldElement&) const = default;

 private:
  std::vector<int> coeffs_;
};

/// True iff `poly` (constant term first, nonzero leading coefficient) has no
/// factor of degree 1..deg/2 over GF(p).
bool is_irreducible(int p, std::span<const int> poly);

/// Smallest monic irreducible of degree n, comparing coefficient tuples
/// constant term first.
FieldSpec find_irreducible(int p, int n);

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);
FieldElement constant(const FieldSpec& spec, std::int64_t value);

/// Enumeration index: sum of c_i p^i. Index 0 is zero, index 1 is one.
std::int64_t to_index(const FieldSpec& spec, const FieldElement& a);
FieldElement from_index(const FieldSpec& spec, std::int64_t index);

FieldElement add(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement sub(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
FieldElement neg(const FieldElement& a, const FieldSpec& spec);
FieldElement mul(const FieldElement& a, const FieldElement& b, const FieldSpec& spec);
/// Throws std::domain_error for a == 0.
FieldElement inv(const FieldElement& a, const FieldSpec& spec);
/// Negative exponents invert first.
FieldElement pow(const FieldElement& a, std::int64_t e, const FieldSpec& spec);
/// a -> a^p.
FieldElement frobenius(const FieldElement& a, const FieldSpec& spec);

/// All q elements in index order.
std::vector<FieldElement> enumerate(const FieldSpec& spec);

/// Polynomial notation in x, e.g. "x+1", "2x^2+1", "0".
std::string to_string(const FieldElement& a);

/// Index-based arithmetic tables for small fields (q <= 1024), used by the
/// matrix-group constructors. Indices follow `to_index`.
class Field {
 public:
  explicit Field(FieldSpec spec);

  [[nodiscard]] const FieldSpec& spec() const { return spec_; }
  [[nodiscard]] int size() const { return q_; }
  [[nodiscard]] int add(int a, int b) const { return add_[a * q_ + b]; }
  [[nodiscard]] int mul(int a, int b) const { return mul_[a * q_ + b]; }
  [[nodiscard]] int neg(int a) const { return neg_[a]; }
  [[nodiscard]] int sub(int a, int b) const { return add(a, neg(b)); }
  [[nodiscard]] int inv(int a) const;
  [[nodiscard]] int frobenius(int a) const { return frob_[a]; }
  [[nodiscard]] const std::string& label(int a) const { return labels_[a]; }

 private:
  FieldSpec spec_;
  int q_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
  std::vector<std::string> labels_;
};

}  // namespace ncg::gf
