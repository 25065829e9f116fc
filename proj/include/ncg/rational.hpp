#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ncg {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// "num/den" with den always present, e.g. "690/19", "16/1", "-3/5".
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Human form: "16" for integers, "690/19" otherwise.
inline std::string to_display(const Rational& r) {
  return is_integral(r) ? r.get_num().get_str() : to_string(r);
}

/// Accepts "n", "n/d" (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Big integer power, base^exp with exp >= 0.
inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace ncg
