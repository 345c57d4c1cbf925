#include "doctest.h"
#include "quatorder/serialize.hpp"
#include "quatorder/sweep.hpp"

using namespace quatorder;

TEST_CASE("construct json") {
  Json j = construct_json(AlgebraParams::hashimoto(35, 3));
  CHECK(j["p"] == 13);
  CHECK(j["a"] == 5);
  CHECK(j["e4"] == "(525j+k)/13");
  CHECK(j["basis"].size() == 4);
  CHECK(construct_json(AlgebraParams::hashimoto(1, 1))["e4"] == "j+k");
}

TEST_CASE("rationals, quaternions and p-adic entries round trip") {
  for (const char* s : {"0/1", "-3/7", "40425/13"}) CHECK(rational_json(rational_from_json(Json(s))) == s);
  Algebra B{-105, 13};
  QuatElem u(B, Rational(-5, 2), Rational(1, 2), Rational(-5, 2), Rational(1, 2));
  CHECK(quat_from_json(quat_json(u), B) == u);
  CHECK(quat_from_json(Json(format_quat(u)), B) == u);
  CHECK(quat_json(u)["x"] == "-5/2");

  auto P = AlgebraParams::hashimoto(35, 3);
  for (long q : {3L, 7L, 11L, 13L}) {
    LocalSplitting s = build_splitting(P, Integer(q), 10);
    for (const auto& v : {s.x, s.y, s.omega, s.root}) {
      if (!v) continue;
      Json j = padic_json(*v, 10);
      CHECK(padic_json(padic_from_json(j), 10) == j);
      CHECK(j["prec"] == 10);
    }
  }
  PadicNum frac = PadicNum::from_rational(Rational(5, 9), 3, 6);
  Json jf = padic_json(frac, 4);
  CHECK(padic_json(padic_from_json(jf), 4) == jf);
  CHECK_THROWS_AS(padic_from_json(Json::object()), Error);
  CHECK_THROWS_AS(quat_from_json(Json(3), B), Error);
}

TEST_CASE("module documents") {
  auto P = AlgebraParams::hashimoto(35, 3);
  Json d = degeneracy_json(degeneracy_bases(P, 11));
  CHECK(d["f"][2] == "(-40950-40425j+k)/13");
  CHECK(d["det_f"] == "11");
  CHECK(d["constants"]["c1"] == "5");

  Json p = psi_json(build_psi(P, 17));
  CHECK(p["beta"] == "8/17");
  CHECK(p["delta"] == "1/17");
  CHECK(p["residual"] == "0/1");
  CHECK(p["images"]["i"] == "(8i+k)/17");

  Json c = chain_json(chain_closed_form(35, 3), 12, true);
  CHECK(c["case"] == "square");
  CHECK(c["basis"] == Json::array({"1", "(1+j)/2"}));
  CHECK(c["stabilized"] == true);

  for (long q : {0L, 3L, 7L, 11L, 13L}) {
    Json s = splitting_json(build_splitting(P, Integer(q), 8));
    CHECK(s["images"]["i"].size() == 2);
  }
  Json r = splitting_json(build_splitting(AlgebraParams::hashimoto(1, 6), 5));
  CHECK(r["images"]["i"][1][0] == "6/1");
}

TEST_CASE("report round trip and text") {
  Report r;
  r.add("b.second", "two", false, "w2");
  r.add("a.first", "one", true);
  Json j = report_json(r, false);
  CHECK(j["passed"] == 1);
  CHECK(j["failed"] == 1);
  Report back = report_from_json(j);
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[0].id == "b.second");
  CHECK(back.checks[0].witness == "w2");
  CHECK_FALSE(back.checks[0].pass);
  CHECK(report_json(Report{}, true)["vacuous"] == true);
  CHECK(report_text(r, false).find("FAIL b.second") != std::string::npos);
}

TEST_CASE("sweep behaviour") {
  SweepConfig empty;
  empty.deltas.clear();
  SweepResult none = run_verify(empty);
  CHECK(none.vacuous());

  SweepConfig cfg;
  cfg.deltas = {6, 35};
  cfg.levels = {1, 3};
  SweepResult a = run_verify(cfg);
  cfg.threads = 1;
  SweepResult b = run_verify(cfg);
  CHECK(report_json(a.report, false).dump() == report_json(b.report, false).dump());
  CHECK(std::is_sorted(a.report.checks.begin(), a.report.checks.end(),
                       [](const auto& x, const auto& y) { return x.id < y.id; }));

  cfg.flip_root_sign = true;
  cfg.deltas = {35};
  cfg.levels = {3};
  SweepResult f = run_verify(cfg);
  bool cn = false;
  for (const auto& c : f.report.checks) cn = cn || (c.id == "split.at-p.cN" && !c.pass);
  CHECK(cn);
}

TEST_CASE("substrate checks") {
  CHECK(verify_substrate(0).all_pass());
  CHECK(verify_substrate(12345, 50).all_pass());
  Report c = verify_construct(AlgebraParams::hashimoto(35, 3));
  CHECK(c.all_pass());
  CHECK(c.checks.size() == 6);
}
