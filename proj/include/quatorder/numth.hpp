#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quatorder/error.hpp"
#include "quatorder/rational.hpp"

namespace quatorder {

/// Default number of q-adic digits carried by local computations.
inline constexpr long kDefaultPrecision = 20;

/// An element of Q_q known to finite precision.
///
/// The value is q^valuation * unit where the unit is known modulo q^digits
/// (capped relative precision). A value with digits == 0 is zero to absolute
/// precision `valuation`. Arithmetic keeps the smallest precision that
/// survives the operation, so congruences are only ever asserted to a level
/// that was actually computed.
class PadicNum {
 public:
  PadicNum() = default;

  static PadicNum from_rational(const Rational& r, const Integer& q, long digits);
  static PadicNum from_integer(const Integer& n, const Integer& q, long digits) {
    return from_rational(Rational(n), q, digits);
  }
  static PadicNum zero(const Integer& q, long absolute_precision);

  const Integer& prime() const { return q_; }
  /// For a zero value this is its absolute precision.
  long valuation() const { return val_; }
  long relative_precision() const { return digits_; }
  long absolute_precision() const { return val_ + digits_; }
  bool is_zero() const { return digits_ == 0; }
  bool is_integral() const { return val_ >= 0; }
  bool is_unit() const { return !is_zero() && val_ == 0; }
  const Integer& unit() const { return unit_; }

  /// True iff the value is divisible by q^m. Throws PrecisionLoss when the
  /// known digits do not decide the question.
  bool divisible_by_power(long m) const;

  /// The value reduced into [0, q^m). Requires integrality and enough
  /// absolute precision.
  Integer residue(long m) const;

  /// Same value with precision capped at `absolute` (never raised).
  PadicNum with_absolute_precision(long absolute) const;

  PadicNum operator-() const;
  friend PadicNum operator+(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }
  friend PadicNum operator*(const PadicNum& a, const PadicNum& b);
  friend PadicNum operator/(const PadicNum& a, const PadicNum& b);
  PadicNum& operator+=(const PadicNum& o) { return *this = *this + o; }
  PadicNum& operator-=(const PadicNum& o) { return *this = *this - o; }
  PadicNum& operator*=(const PadicNum& o) { return *this = *this * o; }

  /// a - b is zero to at least `level` absolute digits.
  friend bool congruent(const PadicNum& a, const PadicNum& b, long level);

 private:
  PadicNum(Integer q, long val, Integer unit, long digits);
  void normalize();

  Integer q_{2};
  long val_ = 0;
  Integer unit_{0};
  long digits_ = 0;
};

/// Legendre symbol (a/q) for an odd prime q: -1, 0 or +1.
int legendre(const Integer& a, const Integer& q);

/// Hilbert symbol (a, b)_v. `place` is a prime, or 0 for the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& place);

bool is_prime(const Integer& n);

/// Root of a mod q in [0, q/2]. Throws NoSquareRoot for non-residues.
Integer sqrt_mod(const Integer& a, const Integer& q);

/// The square root of a q-unit lifted from the canonical residue root
/// (for q = 2: the root congruent to 1 mod 4), to `digits` digits.
PadicNum hensel_sqrt(const PadicNum& a, long digits);

/// Lifts a root of a from a given starting residue mod q (odd q only).
PadicNum hensel_sqrt_from(const PadicNum& a, const Integer& residue, long digits);

/// True iff the q-unit a is a square in Z_q.
bool is_padic_unit_square(const Integer& a, const Integer& q);

struct NormSolution {
  PadicNum x;
  PadicNum y;
};

/// Solves x^2 - p*y^2 = t in Z_q for a q-unit t, with p a nonsquare unit mod
/// q. A rational square t is answered exactly as (sqrt t, 0). Otherwise x is
/// fixed to the smallest residue x0 for which (x0^2 - t)/p is a nonzero
/// square mod q and y is lifted from its canonical root. For q = 2 a pair is
/// first found mod 16 and the odd coordinate is lifted.
NormSolution solve_norm_equation(const Integer& p, const Rational& t, const Integer& q,
                                 long digits);

/// Hashimoto conditions on p for discriminant delta and level n.
bool satisfies_hashimoto_conditions(std::int64_t delta, std::int64_t level, std::int64_t p);

/// Smallest prime satisfying the Hashimoto conditions; 1 when delta == 1.
std::int64_t find_hashimoto_prime(std::int64_t delta, std::int64_t level,
                                  std::int64_t search_bound = 100000);

/// Smallest a in [0, p) with a^2*delta*level + 1 = 0 mod p (0 when p == 1).
std::int64_t find_a(std::int64_t delta, std::int64_t level, std::int64_t p);

/// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);
bool is_squarefree(std::int64_t n);
/// Squarefree with an even number of prime factors (1 included).
bool is_indefinite_discriminant(std::int64_t delta);

struct Bezout {
  Integer gcd;
  Integer s;
  Integer t;
};
/// s*a + t*b = gcd with the minimal cofactors returned by mpz_gcdext.
Bezout extended_gcd(const Integer& a, const Integer& b);

}  // namespace quatorder
