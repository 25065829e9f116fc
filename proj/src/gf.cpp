#include "ncg/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg::gf {

namespace {

constexpr std::int64_t kMaxFieldOrder = std::int64_t{1} << 16;

int mod(std::int64_t v, int p) {
  const auto r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

void check_element(const FieldElement& a, const FieldSpec& spec) {
  const auto& c = a.coeffs();
  if (static_cast<int>(c.size()) != spec.n) {
    throw std::invalid_argument("field element has " + std::to_string(c.size()) +
                                " coefficients, field degree is " + std::to_string(spec.n));
  }
  for (int v : c) {
    if (v < 0 || v >= spec.p) throw std::invalid_argument("field element coefficient out of range");
  }
}

// Remainder of `num` modulo monic-or-not `den` over GF(p); both constant term first.
std::vector<int> poly_rem(std::vector<int> num, std::span<const int> den, int p) {
  int dd = static_cast<int>(den.size()) - 1;
  while (dd >= 0 && den[dd] % p == 0) --dd;
  if (dd < 0) throw std::domain_error("polynomial division by zero");
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x) {
      if ((den[dd] * x) % p == 1) return x;
    }
    throw std::domain_error("non-invertible leading coefficient");
  }();
  for (int top = static_cast<int>(num.size()) - 1; top >= dd; --top) {
    const int f = mod(static_cast<std::int64_t>(num[top]) * lead_inv, p);
    if (f == 0) continue;
    for (int t = 0; t <= dd; ++t) {
      num[top - dd + t] = mod(num[top - dd + t] - static_cast<std::int64_t>(f) * den[t], p);
    }
  }
  num.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return num;
}

// Advances `digits` as a base-p counter whose first digit is most significant.
bool next_tuple(std::vector<int>& digits, int p) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
  int deg = static_cast<int>(poly.size()) - 1;
  while (deg >= 0 && poly[deg] % p == 0) --deg;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    std::vector<int> divisor(d + 1, 0);
    divisor[d] = 1;
    std::vector<int> tail(d, 0);
    do {
      std::copy(tail.begin(), tail.end(), divisor.begin());
      const auto rem = poly_rem(std::vector<int>(poly.begin(), poly.begin() + deg + 1), divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) return false;
    } while (next_tuple(tail, p));
  }
  return true;
}

FieldSpec FieldSpec::make(int p, std::vector<int> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw std::invalid_argument("field modulus must be monic of degree >= 1");
  }
  for (int c : modulus) {
    if (c < 0 || c >= p) throw std::invalid_argument("field modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus)) throw std::invalid_argument("field modulus is reducible");
  FieldSpec spec;
  spec.p = p;
  spec.n = static_cast<int>(modulus.size()) - 1;
  spec.modulus = std::move(modulus);
  if (spec.order() > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
  return spec;
}

std::int64_t FieldSpec::order() const {
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  return q;
}

std::string FieldSpec::modulus_string() const {
  return to_string(FieldElement(modulus));
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

FieldSpec find_irreducible(int p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("field degree must be positive");
  std::vector<int> tail(static_cast<std::size_t>(n), 0);
  do {
    std::vector<int> modulus = tail;
    modulus.push_back(1);
    if (is_irreducible(p, modulus)) return FieldSpec::make(p, std::move(modulus));
  } while (next_tuple(tail, p));
  throw std::logic_error("no irreducible polynomial found");  // unreachable: one exists for every degree
}

FieldElement zero(const FieldSpec& spec) { return FieldElement(std::vector<int>(spec.n, 0)); }

FieldElement one(const FieldSpec& spec) { return constant(spec, 1); }

FieldElement constant(const FieldSpec& spec, std::int64_t value) {
  auto c = std::vector<int>(spec.n, 0);
  c[0] = mod(value, spec.p);
  return FieldElement(std::move(c));
}

std::int64_t to_index(const FieldSpec& spec, const FieldElement& a) {
  check_element(a, spec);
  std::int64_t idx = 0;
  for (int i = spec.n - 1; i >= 0; --i) idx = idx * spec.p + a.coeffs()[i];
  return idx;
}

FieldElement from_index(const FieldSpec& spec, std::int64_t index) {
  if (index < 0 || index >= spec.order()) throw std::out_of_range("field element index out of range");
  std::vector<int> c(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    c[i] = static_cast<int>(index % spec.p);
    index /= spec.p;
  }
  return FieldElement(std::move(c));
}

FieldElement add(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
  check_element(a, spec);
  check_element(b, spec);
  std::vector<int> c(spec.n);
  for (int i = 0; i < spec.n; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % spec.p;
  return FieldElement(std::move(c));
}

FieldElement neg(const FieldElement& a, const FieldSpec& spec) {
  check_element(a, spec);
  std::vector<int> c(spec.n);
  for (int i = 0; i < spec.n; ++i) c[i] = (spec.p - a.coeffs()[i]) % spec.p;
  return FieldElement(std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
  return add(a, neg(b, spec), spec);
}

FieldElement mul(const FieldElement& a, const FieldElement& b, const FieldSpec& spec) {
  check_element(a, spec);
  check_element(b, spec);
  std::vector<int> prod(static_cast<std::size_t>(2 * spec.n - 1), 0);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      prod[i + j] = mod(prod[i + j] + static_cast<std::int64_t>(a.coeffs()[i]) * b.coeffs()[j], spec.p);
    }
  }
  auto rem = poly_rem(std::move(prod), spec.modulus, spec.p);
  rem.resize(static_cast<std::size_t>(spec.n), 0);
  return FieldElement(std::move(rem));
}

FieldElement pow(const FieldElement& a, std::int64_t e, const FieldSpec& spec) {
  if (e < 0) return pow(inv(a, spec), -e, spec);
  FieldElement result = one(spec);
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base, spec);
    base = mul(base, base, spec);
    e >>= 1;
  }
  return result;
}

FieldElement inv(const FieldElement& a, const FieldSpec& spec) {
  check_element(a, spec);
  if (a.is_zero()) throw std::domain_error("inverse of zero in GF(" + std::to_string(spec.order()) + ")");
  return pow(a, spec.order() - 2, spec);
}

FieldElement frobenius(const FieldElement& a, const FieldSpec& spec) { return pow(a, spec.p, spec); }

std::vector<FieldElement> enumerate(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  for (std::int64_t i = 0; i < spec.order(); ++i) out.push_back(from_index(spec, i));
  return out;
}

std::string to_string(const FieldElement& a) {
  std::string out;
  const auto& c = a.coeffs();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(static_cast<int>(spec_.order())) {
  if (q_ > 1024) throw std::invalid_argument("table-backed field limited to q <= 1024");
  const auto elems = enumerate(spec_);
  const auto uq = static_cast<std::size_t>(q_);
  add_.resize(uq * uq);
  mul_.resize(uq * uq);
  neg_.resize(uq);
  inv_.assign(uq, -1);
  frob_.resize(uq);
  labels_.resize(uq);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<int>(to_index(spec_, gf::add(elems[a], elems[b], spec_)));
      mul_[a * q_ + b] = static_cast<int>(to_index(spec_, gf::mul(elems[a], elems[b], spec_)));
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }
    neg_[a] = static_cast<int>(to_index(spec_, gf::neg(elems[a], spec_)));
    frob_[a] = static_cast<int>(to_index(spec_, gf::frobenius(elems[a], spec_)));
    labels_[a] = to_string(elems[a]);
  }
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

}  // namespace ncg::gf
