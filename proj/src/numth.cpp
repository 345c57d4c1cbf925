#include "quatorder/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace quatorder {

namespace {

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::InvalidParameters, a.get_str() + " is not invertible mod " + m.get_str());
  return r;
}

void require_odd_prime(const Integer& q) {
  if (q < 3 || !is_prime(q)) fail(ErrorCode::NotAPrime, q.get_str() + " is not an odd prime");
}

}  // namespace

// ---------------------------------------------------------------------------
// PadicNum

PadicNum::PadicNum(Integer q, long val, Integer unit, long digits)
    : q_(std::move(q)), val_(val), unit_(std::move(unit)), digits_(digits) {
  normalize();
}

void PadicNum::normalize() {
  if (digits_ <= 0) {
    digits_ = 0;
    unit_ = 0;
    return;
  }
  unit_ = floor_mod(unit_, ipow(q_, static_cast<unsigned long>(digits_)));
  if (unit_ == 0) {
    val_ += digits_;
    digits_ = 0;
    return;
  }
  while (mpz_divisible_p(unit_.get_mpz_t(), q_.get_mpz_t())) {
    mpz_divexact(unit_.get_mpz_t(), unit_.get_mpz_t(), q_.get_mpz_t());
    ++val_;
    --digits_;
  }
}

PadicNum PadicNum::from_rational(const Rational& r, const Integer& q, long digits) {
  if (r == 0) return zero(q, digits);
  Integer num = r.get_num();
  Integer den = r.get_den();
  long vn = quatorder::valuation(num, q);
  long vd = quatorder::valuation(den, q);
  num /= ipow(q, static_cast<unsigned long>(vn));
  den /= ipow(q, static_cast<unsigned long>(vd));
  Integer mod = ipow(q, static_cast<unsigned long>(digits));
  return PadicNum(q, vn - vd, floor_mod(num * inverse_mod(den, mod), mod), digits);
}

PadicNum PadicNum::zero(const Integer& q, long absolute_precision) {
  PadicNum z;
  z.q_ = q;
  z.val_ = absolute_precision;
  z.unit_ = 0;
  z.digits_ = 0;
  return z;
}

bool PadicNum::divisible_by_power(long m) const {
  if (val_ >= m) return true;
  if (is_zero())
    fail(ErrorCode::PrecisionLoss, "value known only mod " + q_.get_str() + "^" +
                                       std::to_string(val_) + ", divisibility by power " +
                                       std::to_string(m) + " undecided");
  return false;
}

Integer PadicNum::residue(long m) const {
  if (absolute_precision() < m)
    fail(ErrorCode::PrecisionLoss, "residue mod " + q_.get_str() + "^" + std::to_string(m) +
                                       " needs more precision (have " +
                                       std::to_string(absolute_precision()) + ")");
  if (m <= 0) return 0;
  if (is_zero() || val_ >= m) return 0;
  if (val_ < 0) fail(ErrorCode::InvalidParameters, "residue of a non-integral q-adic number");
  Integer mod = ipow(q_, static_cast<unsigned long>(m));
  return floor_mod(unit_ * ipow(q_, static_cast<unsigned long>(val_)), mod);
}

PadicNum PadicNum::with_absolute_precision(long absolute) const {
  if (absolute >= absolute_precision()) return *this;
  if (absolute <= val_) return zero(q_, absolute);
  return PadicNum(q_, val_, unit_, absolute - val_);
}

PadicNum PadicNum::operator-() const {
  if (is_zero()) return *this;
  return PadicNum(q_, val_, -unit_, digits_);
}

PadicNum operator+(const PadicNum& a, const PadicNum& b) {
  if (a.q_ != b.q_) fail(ErrorCode::AmbientMismatch, "q-adic numbers at different primes");
  long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  long vmin = std::min(a.val_, b.val_);
  if (abs_prec <= vmin) return PadicNum::zero(a.q_, abs_prec);
  Integer s = a.unit_ * ipow(a.q_, static_cast<unsigned long>(a.val_ - vmin)) +
              b.unit_ * ipow(b.q_, static_cast<unsigned long>(b.val_ - vmin));
  return PadicNum(a.q_, vmin, s, abs_prec - vmin);
}

PadicNum operator*(const PadicNum& a, const PadicNum& b) {
  if (a.q_ != b.q_) fail(ErrorCode::AmbientMismatch, "q-adic numbers at different primes");
  if (a.is_zero() || b.is_zero()) return PadicNum::zero(a.q_, a.val_ + b.val_);
  return PadicNum(a.q_, a.val_ + b.val_, a.unit_ * b.unit_, std::min(a.digits_, b.digits_));
}

PadicNum operator/(const PadicNum& a, const PadicNum& b) {
  if (a.q_ != b.q_) fail(ErrorCode::AmbientMismatch, "q-adic numbers at different primes");
  if (b.is_zero()) fail(ErrorCode::PrecisionLoss, "division by a q-adic zero");
  if (a.is_zero()) return PadicNum::zero(a.q_, a.val_ - b.val_);
  long digits = std::min(a.digits_, b.digits_);
  Integer mod = ipow(a.q_, static_cast<unsigned long>(digits));
  return PadicNum(a.q_, a.val_ - b.val_, a.unit_ * inverse_mod(b.unit_, mod), digits);
}

bool congruent(const PadicNum& a, const PadicNum& b, long level) {
  PadicNum d = a - b;
  if (d.absolute_precision() < level)
    fail(ErrorCode::PrecisionLoss, "congruence mod " + a.q_.get_str() + "^" +
                                       std::to_string(level) + " needs more precision (have " +
                                       std::to_string(d.absolute_precision()) + ")");
  return d.divisible_by_power(level);
}

// ---------------------------------------------------------------------------
// Symbols and roots

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

int legendre(const Integer& a, const Integer& q) {
  require_odd_prime(q);
  Integer r = floor_mod(a, q);
  return mpz_legendre(r.get_mpz_t(), q.get_mpz_t());
}

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& place) {
  if (a == 0 || b == 0) fail(ErrorCode::InvalidParameters, "Hilbert symbol of zero");
  if (place == 0) return (a < 0 && b < 0) ? -1 : 1;
  if (!is_prime(place)) fail(ErrorCode::NotAPrime, place.get_str() + " is not a place");
  // a and a*den^2 share a square class.
  Integer ai = a.get_num() * a.get_den();
  Integer bi = b.get_num() * b.get_den();
  long alpha = valuation(ai, place);
  long beta = valuation(bi, place);
  Integer u = ai / ipow(place, static_cast<unsigned long>(alpha));
  Integer v = bi / ipow(place, static_cast<unsigned long>(beta));
  if (place == 2) {
    auto eps = [](const Integer& w) { return floor_mod(w, 4) == 3 ? 1 : 0; };
    auto omega = [](const Integer& w) {
      Integer r = floor_mod(w, 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    long e = eps(u) * eps(v) + (alpha % 2) * omega(v) + (beta % 2) * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  Integer eps_l = floor_mod((place - 1) / 2, 2);
  if ((alpha % 2) && (beta % 2) && eps_l == 1) s = -s;
  if (beta % 2) s *= legendre(u, place);
  if (alpha % 2) s *= legendre(v, place);
  return s;
}

Integer sqrt_mod(const Integer& a, const Integer& q) {
  if (q == 2) return floor_mod(a, 2);
  require_odd_prime(q);
  Integer n = floor_mod(a, q);
  if (n == 0) return 0;
  if (legendre(n, q) != 1)
    fail(ErrorCode::NoSquareRoot, n.get_str() + " is not a square mod " + q.get_str());
  // Tonelli-Shanks.
  Integer s = q - 1;
  unsigned long e = 0;
  while (mpz_even_p(s.get_mpz_t())) {
    s /= 2;
    ++e;
  }
  Integer z = 2;
  while (legendre(z, q) != -1) ++z;
  auto powm = [&q](const Integer& b, const Integer& x) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    return r;
  };
  Integer c = powm(z, s);
  Integer x = powm(n, (s + 1) / 2);
  Integer t = powm(n, s);
  unsigned long m = e;
  while (t != 1) {
    unsigned long i = 0;
    Integer t2 = t;
    while (t2 != 1) {
      t2 = floor_mod(t2 * t2, q);
      ++i;
    }
    Integer b = powm(c, ipow(2, m - i - 1));
    x = floor_mod(x * b, q);
    c = floor_mod(b * b, q);
    t = floor_mod(t * c, q);
    m = i;
  }
  Integer other = q - x;
  return std::min(x, other);
}

bool is_padic_unit_square(const Integer& a, const Integer& q) {
  if (q == 2) return floor_mod(a, 8) == 1;
  return legendre(a, q) == 1;
}

namespace {

PadicNum newton_sqrt(const PadicNum& a, Integer x, long digits) {
  const Integer& q = a.prime();
  digits = std::min(digits, a.absolute_precision());
  Integer target = a.residue(digits);
  long m = 1;
  while (m < digits) {
    m = std::min(2 * m, digits);
    Integer mod = ipow(q, static_cast<unsigned long>(m));
    Integer fx = x * x - target;
    x = floor_mod(x - fx * inverse_mod(floor_mod(2 * x, mod), mod), mod);
  }
  return PadicNum::from_integer(x, q, digits);
}

}  // namespace

PadicNum hensel_sqrt(const PadicNum& a, long digits) {
  const Integer& q = a.prime();
  if (!a.is_unit()) fail(ErrorCode::NotASquare, "hensel_sqrt expects a q-unit");
  if (q == 2) {
    // 2-adic: the derivative 2x has valuation 1, so lift bit by bit from mod 8.
    long target = std::min(digits, a.absolute_precision() - 1);
    if (target < 1) fail(ErrorCode::PrecisionLoss, "not enough 2-adic digits for a root");
    Integer av = a.residue(std::max<long>(3, target + 1));
    if (floor_mod(av, 8) != 1) fail(ErrorCode::NotASquare, "2-adic unit not 1 mod 8");
    Integer x = 1;
    for (long m = 3; m < target + 1; ++m) {
      Integer mod = ipow(2, static_cast<unsigned long>(m + 1));
      if (floor_mod(x * x - av, mod) != 0) x += ipow(2, static_cast<unsigned long>(m - 1));
    }
    return PadicNum::from_integer(floor_mod(x, ipow(2, static_cast<unsigned long>(target))), q,
                                  target);
  }
  Integer r0 = a.residue(1);
  if (legendre(r0, q) != 1)
    fail(ErrorCode::NotASquare, r0.get_str() + " is not a square mod " + q.get_str());
  return newton_sqrt(a, sqrt_mod(r0, q), digits);
}

PadicNum hensel_sqrt_from(const PadicNum& a, const Integer& residue, long digits) {
  const Integer& q = a.prime();
  require_odd_prime(q);
  if (!a.is_unit()) fail(ErrorCode::NotASquare, "hensel_sqrt expects a q-unit");
  if (floor_mod(residue * residue - a.residue(1), q) != 0)
    fail(ErrorCode::NotASquare, "starting residue is not a root mod q");
  return newton_sqrt(a, floor_mod(residue, q), digits);
}

NormSolution solve_norm_equation(const Integer& p, const Rational& t, const Integer& q,
                                  long digits) {
  if (t == 0 || quatorder::valuation(t, q) != 0)
    fail(ErrorCode::InvalidParameters, "norm target must be a q-unit");
  if (q == 2) {
    if (floor_mod(p, 8) != 5)
      fail(ErrorCode::InvalidParameters, "p must be 5 mod 8 for the 2-adic norm equation");
  } else if (legendre(p, q) != -1) {
    fail(ErrorCode::InvalidParameters, "p must be a nonsquare unit mod q");
  }
  if (hilbert_symbol(t, Rational(p), q) != 1)
    fail(ErrorCode::NotANorm, to_string(t) + " is not a local norm at " + q.get_str());

  Rational root;
  if (is_rational_square(t, &root))
    return {PadicNum::from_rational(root, q, digits), PadicNum::zero(q, digits)};

  Rational pr(p);
  if (q == 2) {
    Integer tt = PadicNum::from_rational(t, q, digits + 4).residue(4);
    for (int y0 = 0; y0 < 16; ++y0) {
      for (int x0 = 0; x0 < 16; ++x0) {
        if ((x0 + y0) % 2 == 0) continue;
        if (floor_mod(Integer(x0 * x0) - p * y0 * y0 - tt, 16) != 0) continue;
        if (x0 % 2 == 1) {
          PadicNum sq = PadicNum::from_rational(t + pr * y0 * y0, q, digits + 2);
          return {hensel_sqrt(sq, digits), PadicNum::from_integer(y0, q, digits)};
        }
        PadicNum sq = PadicNum::from_rational((Rational(x0 * x0) - t) / pr, q, digits + 2);
        return {PadicNum::from_integer(x0, q, digits), hensel_sqrt(sq, digits)};
      }
    }
    fail(ErrorCode::NotANorm, "no 2-adic solution mod 16");
  }

  for (Integer x0 = 0; x0 < q; ++x0) {
    Rational rhs = (Rational(x0 * x0) - t) / pr;
    PadicNum r = PadicNum::from_rational(rhs, q, digits);
    if (r.is_zero() || r.valuation() != 0) continue;
    if (legendre(r.residue(1), q) != 1) continue;
    return {PadicNum::from_integer(x0, q, digits), hensel_sqrt(r, digits)};
  }
  fail(ErrorCode::NotANorm, "no residue solution mod " + q.get_str());
}

// ---------------------------------------------------------------------------
// Parameter searches

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n <= 0) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

bool is_indefinite_discriminant(std::int64_t delta) {
  return is_squarefree(delta) && prime_factors(delta).size() % 2 == 0;
}

namespace {

void validate_delta_level(std::int64_t delta, std::int64_t level) {
  if (!is_indefinite_discriminant(delta))
    fail(ErrorCode::InvalidParameters,
         "discriminant " + std::to_string(delta) +
             " must be squarefree with an even number of prime factors");
  if (level < 1) fail(ErrorCode::InvalidParameters, "level must be positive");
  if (std::gcd(delta, level) != 1)
    fail(ErrorCode::InvalidParameters, "level must be coprime to the discriminant");
}

}  // namespace

bool satisfies_hashimoto_conditions(std::int64_t delta, std::int64_t level, std::int64_t p) {
  if (!is_prime(Integer(static_cast<long>(p)))) return false;
  if (p % 4 != 1) return false;
  if (delta % 2 == 0 && p % 8 != 5) return false;
  if (level % 2 == 0 && p % 8 != 1) return false;
  if (delta % p == 0 || level % p == 0) return false;
  Integer pz(static_cast<long>(p));
  for (auto pi : prime_factors(delta)) {
    if (pi != 2 && legendre(pz, Integer(static_cast<long>(pi))) != -1) return false;
  }
  for (auto s : prime_factors(level)) {
    if (s != 2 && legendre(pz, Integer(static_cast<long>(s))) != 1) return false;
  }
  return true;
}

std::int64_t find_hashimoto_prime(std::int64_t delta, std::int64_t level,
                                  std::int64_t search_bound) {
  validate_delta_level(delta, level);
  if (delta == 1) return 1;
  for (std::int64_t p = 2; p <= search_bound; ++p) {
    if (satisfies_hashimoto_conditions(delta, level, p)) return p;
  }
  fail(ErrorCode::SearchExhausted, "no Hashimoto prime below " + std::to_string(search_bound) +
                                       " for discriminant " + std::to_string(delta) +
                                       ", level " + std::to_string(level));
}

std::int64_t find_a(std::int64_t delta, std::int64_t level, std::int64_t p) {
  if (p == 1) return 0;
  Integer dn = Integer(static_cast<long>(delta)) * static_cast<long>(level);
  Integer pz(static_cast<long>(p));
  for (std::int64_t a = 0; a < p; ++a) {
    if (floor_mod(dn * a * a + 1, pz) == 0) return a;
  }
  fail(ErrorCode::InvalidParameters,
       "-" + dn.get_str() + " is not a square mod " + std::to_string(p));
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.gcd.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace quatorder
