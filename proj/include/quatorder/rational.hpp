#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace quatorder {

using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den" with den >= 1; integers are written with an explicit "/1".
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

/// Accepts "n", "n/d" and "-n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exponent of the prime q in n (n != 0).
long valuation(Integer n, const Integer& q);
/// v_q(num) - v_q(den) for r != 0.
long valuation(const Rational& r, const Integer& q);

/// Largest s >= 0 with s*s <= n, and whether equality holds.
bool is_perfect_square(const Integer& n, Integer* root = nullptr);
bool is_rational_square(const Rational& r, Rational* root = nullptr);

inline std::int64_t to_i64(const Integer& n) { return n.get_si(); }

}  // namespace quatorder
