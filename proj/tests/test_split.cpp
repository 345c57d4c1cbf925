#include "doctest.h"
#include "quatorder/split.hpp"

using namespace quatorder;

namespace {

bool all_pass(const Report& r) { return r.all_pass() && !r.checks.empty(); }

bool has_failure(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id && !c.pass) return true;
  return false;
}

}  // namespace

TEST_CASE("dispatch for (35, 3)") {
  auto P = AlgebraParams::hashimoto(35, 3);
  CHECK(classify_place(P, 0) == SplitCase::Archimedean);
  CHECK(classify_place(P, 3) == SplitCase::UnramSquare);
  CHECK(classify_place(P, 5) == SplitCase::Ramified);
  CHECK(classify_place(P, 7) == SplitCase::Ramified);
  CHECK(classify_place(P, 11) == SplitCase::UnramNonsquare);
  CHECK(classify_place(P, 13) == SplitCase::AtP);
  CHECK(classify_place(P, 17) == SplitCase::UnramSquare);
  CHECK_THROWS_AS(classify_place(P, 2), Error);
  CHECK_THROWS_AS(classify_place(P, 9), Error);
  CHECK(classify_place(AlgebraParams::hashimoto(1, 6), 5) == SplitCase::Rational);
}

TEST_CASE("every place of (35, 3) verifies") {
  auto P = AlgebraParams::hashimoto(35, 3);
  ZLattice4 R = hashimoto_order(P);
  for (long q : {0L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
    LocalSplitting s = build_splitting(P, Integer(q));
    INFO(s.describe());
    CHECK(all_pass(verify_splitting(s, R)));
  }
}

TEST_CASE("more parameter sets") {
  for (auto [d, n] : {std::pair{6L, 5L}, {10L, 3L}, {15L, 2L}, {21L, 1L}, {26L, 9L}, {1L, 6L}}) {
    auto P = AlgebraParams::hashimoto(d, n);
    ZLattice4 R = hashimoto_order(P);
    for (long q : {0L, 2L, 3L, 5L, 7L, 11L, 13L, P.p()}) {
      if (q == 1) continue;
      LocalSplitting s;
      try {
        s = build_splitting(P, Integer(q));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unsupported);
        continue;
      }
      INFO(s.describe());
      CHECK(all_pass(verify_splitting(s, R)));
    }
  }
}

TEST_CASE("rational case image and formula") {
  auto P = AlgebraParams::hashimoto(1, 6);
  LocalSplitting s = build_splitting(P, 5);
  auto e = hashimoto_basis(P);
  auto id = std::get<Mat2<Rational>>(embed_element(s, e[0]));
  CHECK((id.a == 1 && id.b == 0 && id.c == 0 && id.d == 1));
  const Rational N = 6;
  for (long x : {0L, 2L}) for (long y : {-1L, 3L}) for (long z : {0L, 5L}) for (long t : {1L, -4L}) {
    QuatElem u = Rational(x) * e[0] + Rational(y) * e[1] + Rational(z) * e[2] + Rational(t) * e[3];
    auto m = std::get<Mat2<Rational>>(embed_element(s, u));
    CHECK(m.a == x - N * t);
    CHECK(m.b == -z - t);
    CHECK(m.c == -N * t);
    CHECK(m.d == x + y + N * t);
  }
  Report r = verify_splitting(s, hashimoto_order(P));
  bool lattice = false;
  for (const auto& c : r.checks) lattice = lattice || (c.id == "split.rational.image_lattice" && c.pass);
  CHECK(lattice);
}

TEST_CASE("flipped root at p breaks the normalization") {
  auto P = AlgebraParams::hashimoto(35, 3);
  SplitOptions o;
  o.flip_root_sign = true;
  LocalSplitting s = build_splitting(P, 13, 20, o);
  Report r = verify_splitting(s, hashimoto_order(P));
  CHECK(has_failure(r, "split.at-p.cN"));
  CHECK_FALSE(has_failure(r, "split.at-p.i_squared"));
}

TEST_CASE("at-p root normalization") {
  auto P = AlgebraParams::hashimoto(35, 3);
  LocalSplitting s = build_splitting(P, 13);
  REQUIRE(s.root);
  CHECK(s.root->residue(1) == 5);
  CHECK(floor_mod(Integer(525) - s.root->residue(1), Integer(13)) == 0);
}

TEST_CASE("expected case mismatch") {
  auto P = AlgebraParams::hashimoto(35, 3);
  SplitOptions o;
  o.expect = SplitCase::UnramSquare;
  CHECK_NOTHROW(build_splitting(P, 3, 10, o));
  try {
    build_splitting(P, 11, 10, o);
    FAIL("mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CaseMismatch);
  }
}

TEST_CASE("precision k and k+4 agree") {
  auto P = AlgebraParams::hashimoto(35, 3);
  auto e = hashimoto_basis(P);
  for (long q : {3L, 11L, 13L}) {
    LocalSplitting lo = build_splitting(P, Integer(q), 12);
    LocalSplitting hi = build_splitting(P, Integer(q), 16);
    for (const auto& u : e)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(entry_residue(lo, u, r, c, 12) == entry_residue(hi, u, r, c, 12));
  }
  CHECK_THROWS_AS(build_splitting(P, 3, 0), Error);
}

TEST_CASE("ramified images are integral in the unramified extension") {
  auto P = AlgebraParams::hashimoto(35, 3);
  LocalSplitting s = build_splitting(P, 7);
  REQUIRE(s.x);
  REQUIRE(s.y);
  PadicNum t = PadicNum::from_integer(-15, 7, 22);
  PadicNum p = PadicNum::from_integer(13, 7, 22);
  CHECK(congruent(*s.x * *s.x - p * *s.y * *s.y, t, 20));
  for (const auto& u : hashimoto_basis(P)) CHECK(in_local_order(s, embed_element(s, u)));
}
