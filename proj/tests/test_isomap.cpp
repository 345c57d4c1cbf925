#include <random>

#include "doctest.h"
#include "quatorder/isomap.hpp"

using namespace quatorder;

TEST_CASE("conic solutions") {
  ConicSolution s = solve_conic(17, 13, 3);
  CHECK(conic_residual(17, 13, 3, s) == 0);
  CHECK(conic_residual(17, 13, 3, {Rational(8, 17), Rational(1, 17)}) == 0);
  ConicSolution id = solve_conic(7, 13, 7);
  CHECK(id.beta == 1);
  CHECK(id.delta == 0);
  ConicSolution sq = solve_conic(3, 13, 12);
  CHECK(sq.beta == 2);
  CHECK(sq.delta == 0);
  CHECK_THROWS_AS(solve_conic(3, 13, 12, 0), Error);
  CHECK_THROWS_AS(solve_conic(0, 13, 12), Error);
}

TEST_CASE("psi from 3 to 17") {
  auto P = AlgebraParams::hashimoto(35, 3);
  PsiMap m = build_psi(P, 17);
  CHECK(m.beta == Rational(8, 17));
  CHECK(m.delta == Rational(1, 17));
  CHECK_FALSE(m.S.has_value());
  CHECK(verify_psi(m).all_pass());
  QuatElem pi = apply_psi(m, QuatElem::i(P.algebra()));
  CHECK(pi * pi == QuatElem::scalar(m.target.algebra(), -105));
  CHECK_THROWS_AS(verify_psi_inclusion(m), Error);

  PsiMap given = m;
  given.beta = Rational(8, 17);
  given.delta = Rational(1, 17);
  CHECK(verify_psi(given).all_pass());
  given.delta = Rational(2, 17);
  CHECK_FALSE(verify_psi(given).all_pass());
}

TEST_CASE("inclusion for divisors") {
  int pairs = 0;
  for (long delta : {1L, 6L, 10L, 15L, 35L}) {
    for (long n : {2L, 3L, 9L, 6L, 12L}) {
      AlgebraParams P = AlgebraParams::hashimoto(1, 1);
      try {
        P = AlgebraParams::hashimoto(delta, n);
      } catch (const Error&) {
        continue;
      }
      for (long m : {1L, 2L, 3L, 4L, 6L}) {
        if (n % m != 0 || m == n) continue;
        PsiMap psi = build_psi(P, m);
        INFO("delta=" << delta << " N=" << n << " M=" << m);
        CHECK(verify_psi(psi).all_pass());
        CHECK(verify_psi_inclusion(psi).all_pass());
        PsiCoefficients k = psi_coefficients(psi);
        CHECK(k.B4 == -2 * k.A4);
        ++pairs;
      }
    }
  }
  CHECK(pairs > 10);
}

TEST_CASE("closed form for delta = 1") {
  PsiMap m = build_psi(AlgebraParams::hashimoto(1, 6), 2);
  CHECK(m.beta == 2);
  CHECK(m.delta == -1);
  CHECK(verify_psi(m).all_pass());
  CHECK(verify_psi_inclusion(m).all_pass());
}

TEST_CASE("norm and trace preserved on random elements") {
  auto P = AlgebraParams::hashimoto(35, 3);
  PsiMap m = build_psi(P, 17);
  auto e = hashimoto_basis(P);
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> c(-100, 100);
  for (int t = 0; t < 100; ++t) {
    std::vector<Integer> k = {c(rng), c(rng), c(rng), c(rng)};
    QuatElem u = combine(e, k);
    QuatElem v = combine(e, std::vector<Integer>{c(rng), c(rng), c(rng), c(rng)});
    QuatElem pu = apply_psi(m, u);
    CHECK(pu.reduced_norm() == u.reduced_norm());
    CHECK(pu.reduced_trace() == u.reduced_trace());
    CHECK(apply_psi(m, u * v) == pu * apply_psi(m, v));
  }
}

TEST_CASE("sign normalization mod p") {
  auto P = AlgebraParams::hashimoto(35, 12);
  PsiMap m = build_psi(P, 3);
  REQUIRE(m.S);
  Integer b = floor_mod(m.beta.get_num(), Integer(static_cast<long>(P.p())));
  CHECK(floor_mod(Integer(static_cast<long>(P.a())) * b - m.target.a(), Integer(static_cast<long>(P.p()))) == 0);
  CHECK(verify_psi(m).all_pass());
}
