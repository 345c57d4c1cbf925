#include "doctest.h"
#include "quatorder/chains.hpp"
#include "quatorder/degeneracy.hpp"

using namespace quatorder;

namespace {

const std::vector<long> kDepths = {8, 10, 12};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InvalidParameters;
}

}  // namespace

TEST_CASE("square case q = 3") {
  ChainBasis c = chain_closed_form(35, 3);
  CHECK(c.kind == ChainCase::Square);
  CHECK(format_quat(c.generators[0]) == "1");
  CHECK(format_quat(c.generators[1]) == "(1+j)/2");
  CHECK(verify_chain(c, kDepths).all_pass());
}

TEST_CASE("at p = 13") {
  ChainBasis c = chain_closed_form(35, 13);
  CHECK(c.kind == ChainCase::AtP);
  auto e = hashimoto_basis(c.base);
  const long a = c.base.a();
  CHECK(c.generators[1] == combine(e, std::vector<Integer>{0, -2 * a * 35, -2, 13}));
  CHECK(verify_chain(c, kDepths).all_pass());
}

TEST_CASE("nonsquare cases") {
  ChainBasis direct = chain_closed_form(35, 11);
  CHECK(direct.kind == ChainCase::NonsquareDirect);
  CHECK(format_quat(direct.generators[1]) == "-210-i");
  CHECK(verify_chain(direct, kDepths).all_pass());

  ChainBasis aux = chain_closed_form(35, 19);
  CHECK(aux.kind == ChainCase::NonsquareAuxiliary);
  CHECK(aux.level.level() == 3);
  CHECK(aux.in_base.rank() == 2);
  CHECK(verify_chain(aux, kDepths).all_pass());
}

TEST_CASE("oracle at small depth") {
  ChainBasis c = chain_closed_form(35, 3);
  CHECK(chain_oracle(c, 0) == hashimoto_order(c.level));
  DegeneracyPair d = degeneracy_bases(c.level, 3);
  CHECK(chain_oracle(c, 1) == ZLattice4(c.level.algebra(), d.f));
  for (long n = 1; n < 10; ++n) CHECK(chain_oracle(c, n).contains(chain_oracle(c, n + 1)));
  CHECK(code_of([&] { chain_oracle(c, 17, 20); }) == ErrorCode::PrecisionLoss);
  CHECK(code_of([&] { chain_oracle(c, -1); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("intersections with an auxiliary nonsquare prime") {
  ChainBasis q = chain_closed_form(35, 3);
  ChainBasis s = chain_closed_form(35, 19);
  ChainBasis p = chain_closed_form(35, 13);
  CHECK_NOTHROW(check_pairwise_hypotheses(q, s, p));
  const Algebra B = q.base.algebra();
  for (const auto& [a, b] : {std::pair{&q, &s}, {&q, &p}, {&s, &p}}) {
    ZLattice4 meet = pairwise_intersection(*a, *b);
    CHECK(meet.rank() == 1);
    CHECK(meet.contains(QuatElem::one(B)));
    auto units = norm_one_elements(meet);
    REQUIRE(units.size() == 2);
    CHECK((units[0] == QuatElem::one(B) || units[1] == QuatElem::one(B)));
    CHECK(units[0] == -units[1]);
  }
  std::vector<ChainBasis> all = {q, p, s};
  ZLattice4 g = global_intersection(all);
  CHECK(g.rank() == 1);
  CHECK(norm_one_elements(g).size() == 2);
  CHECK(pairwise_intersection(q, q) == q.in_base);
}

TEST_CASE("direct nonsquare chain coincides with the chain at p") {
  ChainBasis s = chain_closed_form(35, 11);
  ChainBasis p = chain_closed_form(35, 13);
  ZLattice4 meet = pairwise_intersection(s, p);
  CHECK(meet.rank() == 2);
  CHECK(meet == s.in_base);
  CHECK(meet.contains(QuatElem::i(s.base.algebra())));
}

TEST_CASE("hypotheses and unsupported inputs") {
  ChainBasis q = chain_closed_form(35, 3);
  ChainBasis p = chain_closed_form(35, 13);
  CHECK(code_of([&] { check_pairwise_hypotheses(p, q, p); }) == ErrorCode::CaseMismatch);
  CHECK(code_of([&] { chain_closed_form(1, 3); }) == ErrorCode::Unsupported);
  CHECK(code_of([&] { chain_closed_form(35, 5); }) == ErrorCode::RamifiedPlace);
  CHECK(code_of([&] { chain_closed_form(35, 19, 2); }) == ErrorCode::SearchExhausted);
}

TEST_CASE("norm one elements of rank two lattices") {
  auto P = AlgebraParams::hashimoto(35, 1);
  const Algebra B = P.algebra();
  std::vector<QuatElem> gens = {QuatElem::one(B), QuatElem::i(B)};
  auto units = norm_one_elements(ZLattice4(B, gens));
  CHECK(units.size() == 2);
}
