#include <random>
#include <set>

#include "doctest.h"
#include "quatorder/numth.hpp"

using namespace quatorder;

namespace {

std::vector<long> small_primes(long below) {
  std::vector<long> out;
  for (long n = 2; n < below; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("legendre matches enumeration below 100") {
  for (long q : small_primes(100)) {
    if (q == 2) continue;
    std::set<long> squares;
    for (long x = 1; x < q; ++x) squares.insert(x * x % q);
    for (long a = -q; a < 2 * q; ++a) {
      long r = ((a % q) + q) % q;
      int expect = r == 0 ? 0 : (squares.count(r) ? 1 : -1);
      CHECK_MESSAGE(legendre(Integer(a), Integer(q)) == expect, "a=" << a << " q=" << q);
    }
  }
  CHECK(legendre(13, 11) == -1);
  CHECK(legendre(13, 3) == 1);
  CHECK(legendre(1, 97) == 1);
}

TEST_CASE("sqrt_mod returns the small root") {
  CHECK(sqrt_mod(12, 13) == 5);
  CHECK(sqrt_mod(3, 11) == 5);
  CHECK(sqrt_mod(0, 7) == 0);
  for (long q : small_primes(100)) {
    if (q == 2) continue;
    for (long a = 1; a < q; ++a) {
      if (legendre(Integer(a), Integer(q)) != 1) {
        CHECK_THROWS_AS(sqrt_mod(Integer(a), Integer(q)), Error);
        continue;
      }
      Integer r = sqrt_mod(Integer(a), Integer(q));
      CHECK(floor_mod(r * r - a, Integer(q)) == 0);
      CHECK(2 * r <= q);
    }
  }
}

TEST_CASE("hilbert symbol values") {
  CHECK(hilbert_symbol(-105, 13, 11) == 1);
  CHECK(hilbert_symbol(-105, 13, 5) == -1);
  CHECK(hilbert_symbol(-105, 13, 7) == -1);
  CHECK(hilbert_symbol(-105, 13, 0) == 1);
  CHECK(hilbert_symbol(49, -3, 2) == 1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
}

TEST_CASE("hilbert product formula on random pairs") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> d(-5000, 5000);
  int done = 0;
  while (done < 200) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    ++done;
    int prod = hilbert_symbol(Rational(a), Rational(b), 0);
    std::set<std::int64_t> places{2};
    for (auto q : prime_factors(std::labs(a))) places.insert(q);
    for (auto q : prime_factors(std::labs(b))) places.insert(q);
    for (auto q : places) prod *= hilbert_symbol(Rational(a), Rational(b), Integer(static_cast<long>(q)));
    CHECK_MESSAGE(prod == 1, "(" << a << ", " << b << ")");
  }
}

TEST_CASE("hensel roots") {
  PadicNum w = hensel_sqrt(PadicNum::from_integer(13, 3, 6), 4);
  Integer r = w.residue(4);
  CHECK(floor_mod(r * r - 13, Integer(81)) == 0);
  CHECK(floor_mod(r, Integer(3)) == 1);

  PadicNum v = hensel_sqrt(PadicNum::from_integer(17, 2, 8), 6);
  Integer s = v.residue(6);
  CHECK(floor_mod(s * s - 17, Integer(64)) == 0);
  CHECK(floor_mod(s, Integer(4)) == 1);

  for (long q : {2L, 3L, 5L, 7L, 11L}) CHECK(hensel_sqrt(PadicNum::from_integer(1, Integer(q), 12), 10).residue(10) == 1);

  std::mt19937_64 rng(0);
  for (long q : small_primes(100)) {
    Integer Q(q), qk = ipow(Q, 24);
    for (int t = 0; t < 5; ++t) {
      Integer x0 = Integer(static_cast<long>(rng() % 100000)) * q + 1 + static_cast<long>(rng() % (q - 1 ? q - 1 : 1));
      if (q == 2) x0 = 2 * x0 + 1;
      Integer a = x0 * x0;
      Integer root = hensel_sqrt(PadicNum::from_integer(a, Q, 26), 24).residue(24);
      CHECK(floor_mod(root * root - a, qk) == 0);
    }
  }
  CHECK_THROWS_AS(hensel_sqrt(PadicNum::from_integer(2, 3, 8), 6), Error);
  CHECK_THROWS_AS(hensel_sqrt(PadicNum::from_integer(5, 2, 8), 6), Error);
}

TEST_CASE("norm equation solutions") {
  NormSolution s = solve_norm_equation(13, Rational(-105), 11, 8);
  CHECK(s.x.residue(1) == 0);
  CHECK(s.y.residue(1) == 5);
  PadicNum t = PadicNum::from_integer(-105, 11, 10);
  PadicNum p = PadicNum::from_integer(13, 11, 10);
  CHECK(congruent(s.x * s.x - p * s.y * s.y, t, 8));

  NormSolution one = solve_norm_equation(13, Rational(1), 11, 8);
  CHECK(one.x.residue(8) == 1);
  CHECK(one.y.is_zero());

  NormSolution f = solve_norm_equation(13, Rational(-21), 5, 6);
  PadicNum t5 = PadicNum::from_integer(-21, 5, 8), p5 = PadicNum::from_integer(13, 5, 8);
  CHECK(congruent(f.x * f.x - p5 * f.y * f.y, t5, 6));
}

TEST_CASE("hashimoto prime and a") {
  CHECK(find_hashimoto_prime(35, 3) == 13);
  CHECK(find_hashimoto_prime(35, 1) == 13);
  CHECK(find_hashimoto_prime(1, 7) == 1);
  std::int64_t p = find_hashimoto_prime(15, 2);
  CHECK(p % 8 == 1);
  CHECK(satisfies_hashimoto_conditions(15, 2, p));
  CHECK(find_a(35, 3, 13) == 5);
  std::int64_t a = find_a(35, 17, 13);
  CHECK((595 * a * a + 1) % 13 == 0);
  CHECK(find_a(35, 1, 13) >= 0);
  CHECK_THROWS_AS(find_hashimoto_prime(3, 1), Error);
  CHECK_THROWS_AS(find_hashimoto_prime(35, 5), Error);
}

TEST_CASE("p-adic precision is stable between k and k+4") {
  PadicNum lo = hensel_sqrt(PadicNum::from_integer(13, 3, 22), 20);
  PadicNum hi = hensel_sqrt(PadicNum::from_integer(13, 3, 26), 24);
  CHECK(congruent(lo, hi, 20));
  CHECK(hi.residue(20) == lo.residue(20));
}

TEST_CASE("padic arithmetic and precision errors") {
  PadicNum x = PadicNum::from_rational(Rational(1, 3), 3, 5);
  CHECK(x.valuation() == -1);
  CHECK_FALSE(x.is_integral());
  CHECK_THROWS_AS(x.residue(2), Error);
  PadicNum y = PadicNum::from_integer(9, 3, 5);
  CHECK((x * y).residue(3) == 3);
  PadicNum z = PadicNum::zero(3, 4);
  CHECK_THROWS_AS(z.divisible_by_power(6), Error);
  CHECK(z.divisible_by_power(4));
  CHECK_THROWS_AS(valuation(Integer(12), Integer(1)), Error);
  CHECK(valuation(Integer(12), Integer(2)) == 2);
}
