#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "ffcheck/error.hpp"

namespace ffcheck {

using BigInt = mpz_class;
/// Arbitrary precision rational; GMP keeps it in lowest terms with a positive
/// denominator once canonicalized, which every constructor below guarantees.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// "num" for integers, "num/den" otherwise.
inline std::string to_string(const BigRational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigRational pow(const BigRational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

/// Integer power with possibly negative exponent; base must be nonzero when
/// the exponent is negative.
inline BigRational pow_signed(const BigRational& base, long exponent) {
  if (exponent >= 0) return pow(base, static_cast<unsigned>(exponent));
  if (base == 0) throw InvalidInput("zero raised to a negative power");
  BigRational inv = 1 / base;
  return pow(inv, static_cast<unsigned>(-exponent));
}

/// Exact square root if q is the square of a rational.
inline std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Parses "a" or "a/b" with optional leading sign.
inline BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw ParseError("malformed rational '" + text + "'", 0);
  q.canonicalize();
  return q;
}

}  // namespace ffcheck
