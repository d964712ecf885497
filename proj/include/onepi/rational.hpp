#ifndef ONEPI_RATIONAL_HPP
#define ONEPI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace onepi {

/// Exact rational number in canonical form (gcd-reduced, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt &num, const BigInt &den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline std::string to_string(const Rational &r) { return r.get_str(); }

}  // namespace onepi

#endif  // ONEPI_RATIONAL_HPP
