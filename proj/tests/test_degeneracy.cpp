#include "doctest.h"
#include "quatorder/degeneracy.hpp"

using namespace quatorder;

namespace {

QuatElem q(const char* s, const Algebra& B) { return parse_quat(s, B); }

}  // namespace

TEST_CASE("level 33 inside level 3 at q = 11") {
  auto P = AlgebraParams::hashimoto(35, 3);
  const Algebra B = P.algebra();
  DegeneracyPair d = degeneracy_bases(P, 11);
  CHECK(d.constants.kind == DegeneracyCase::Nonsquare);
  CHECK(d.constants.c1 == 5);

  std::vector<QuatElem> f = {QuatElem::one(B), q("(-5+i-5j+k)/2", B), q("(-40950-40425j+k)/13", B),
                             q("(11+11j)/2", B)};
  std::vector<QuatElem> g = {QuatElem::one(B), q("(5+i+5j+k)/2", B), q("(-40950-40425j+k)/13", B),
                             q("(11+11j)/2", B)};
  CHECK(ZLattice4(B, d.f) == ZLattice4(B, f));
  CHECK(ZLattice4(B, d.g) == ZLattice4(B, g));
  CHECK(d.f[1] == f[1]);
  CHECK(d.f[2] == f[2]);
  CHECK(d.f[3] == f[3]);
  CHECK(d.g[1] == g[1]);
  CHECK(reduced_discriminant(f) == 1155);
  CHECK(abs(d.det_f) == 11);
  CHECK(abs(d.det_g) == 11);

  LocalSplitting s = build_splitting(P, 11);
  Report r = verify_degeneracy(d, s);
  CHECK(r.all_pass());
  CHECK(ZLattice4(B, d.f) == degeneracy_oracle(s, false));
  CHECK(ZLattice4(B, d.g) == degeneracy_oracle(s, true));
}

TEST_CASE("at p = 13") {
  auto P = AlgebraParams::hashimoto(35, 3);
  DegeneracyPair d = degeneracy_bases(P, 13);
  CHECK(d.constants.kind == DegeneracyCase::AtP);
  CHECK(d.constants.c4 == 5);
  CHECK((525 - 5) % 13 == 0);
  CHECK(d.constants.A == -163);
  CHECK(d.constants.B == 2);
  CHECK(13 * d.constants.A + 1060 * d.constants.B == 1);
  CHECK(abs(d.det_f) == 13);
  CHECK(abs(d.det_g) == 13);
  CHECK(verify_degeneracy(d, build_splitting(P, 13)).all_pass());
}

TEST_CASE("square case at q = 3, level 1") {
  auto P = AlgebraParams::hashimoto(35, 1);
  auto e = hashimoto_basis(P);
  DegeneracyPair d = degeneracy_bases(P, 3);
  CHECK(d.constants.kind == DegeneracyCase::Square);
  CHECK(d.constants.c == 0);
  CHECK(d.f[2] == e[2]);
  CHECK(d.f[3] == Rational(3) * e[3]);
  LocalSplitting s = build_splitting(P, 3);
  for (const auto& u : d.f) CHECK(entry_residue(s, u, 1, 0, 1) == 0);
  CHECK(verify_degeneracy(d, s).all_pass());
}

TEST_CASE("certificates across parameters") {
  int done = 0;
  for (long delta : {1L, 6L, 10L, 14L, 15L, 21L, 22L, 26L, 34L, 35L}) {
    for (long n : {1L, 2L, 3L, 5L, 7L, 9L, 11L}) {
      AlgebraParams P = AlgebraParams::hashimoto(1, 1);
      try {
        P = AlgebraParams::hashimoto(delta, n);
      } catch (const Error&) {
        continue;
      }
      for (long qq : {2L, 3L, 5L, 7L, 11L, 13L, P.p()}) {
        if (qq == 1) continue;
        try {
          DegeneracyPair d = degeneracy_bases(P, Integer(qq));
          Report r = verify_degeneracy(d, build_splitting(P, Integer(qq)));
          INFO("delta=" << delta << " N=" << n << " q=" << qq);
          CHECK(r.all_pass());
          ++done;
        } catch (const Error& e) {
          CHECK((e.code() == ErrorCode::RamifiedPlace || e.code() == ErrorCode::Unsupported));
        }
      }
    }
  }
  CHECK(done > 200);
}

TEST_CASE("ramified q is rejected") {
  auto P = AlgebraParams::hashimoto(35, 3);
  try {
    degeneracy_bases(P, 5);
    FAIL("ramified q accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RamifiedPlace);
  }
}

TEST_CASE("congruence kernel") {
  auto P = AlgebraParams::hashimoto(35, 3);
  auto e = hashimoto_basis(P);
  ZLattice4 k = congruence_kernel(e, {0, 1, 0, 0}, 7);
  CHECK(hashimoto_order(P).index_of(k) == 7);
  CHECK(k.contains(e[0]));
  CHECK_FALSE(k.contains(e[1]));
  CHECK(k.contains(Rational(7) * e[1]));
}
