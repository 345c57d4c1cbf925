#include "quatorder/serialize.hpp"

#include <sstream>

namespace quatorder {

namespace {

std::string place_text(const Integer& q) { return q == 0 ? "inf" : q.get_str(); }

std::string short_q(const Rational& r) { return is_integer(r) ? r.get_num().get_str() : to_string(r); }

Json entry_json(const Rational& r, long) { return rational_json(r); }
Json entry_json(const PadicNum& x, long prec) { return padic_json(x, prec); }
Json entry_json(const PadicQuad& x, long prec) {
  return {{"a", padic_json(x.a(), prec)}, {"b", padic_json(x.b(), prec)}, {"sqrt", x.radicand().get_str()}};
}
Json entry_json(const QuadRat& x, long) {
  Json j = {{"a", rational_json(x.a())}, {"b", rational_json(x.b())}};
  if (x.radicand() != 0) j["sqrt"] = x.radicand().get_str();
  return j;
}

template <class T>
Json mat_json(const Mat2<T>& m, long prec) {
  return Json::array({Json::array({entry_json(m.a, prec), entry_json(m.b, prec)}),
                      Json::array({entry_json(m.c, prec), entry_json(m.d, prec)})});
}

std::string entry_text(const Rational& r, long) { return short_q(r); }
std::string entry_text(const PadicNum& x, long prec) {
  if (x.is_zero() || x.absolute_precision() <= 0 || std::min(prec, x.absolute_precision()) <= x.valuation())
    return "O(" + x.prime().get_str() + "^" + std::to_string(std::min(prec, x.absolute_precision())) + ")";
  return short_q(parse_rational(padic_json(x, prec)["residue"].get<std::string>())) + " + O(" + x.prime().get_str() + "^" +
         std::to_string(std::min(prec, x.absolute_precision())) + ")";
}
std::string entry_text(const PadicQuad& x, long prec) {
  return "(" + entry_text(x.a(), prec) + ") + (" + entry_text(x.b(), prec) + ")*sqrt(" +
         x.radicand().get_str() + ")";
}
std::string entry_text(const QuadRat& x, long) {
  if (x.b() == 0) return short_q(x.a());
  std::string s = x.a() == 0 ? "" : short_q(x.a()) + (x.b() > 0 ? "+" : "");
  if (x.b() == -1) s += "-";
  else if (x.b() != 1) s += short_q(x.b()) + "*";
  return s + "sqrt(" + x.radicand().get_str() + ")";
}

template <class T>
std::string mat_text(const Mat2<T>& m, long prec) {
  return "[" + entry_text(m.a, prec) + ", " + entry_text(m.b, prec) + "; " + entry_text(m.c, prec) + ", " +
         entry_text(m.d, prec) + "]";
}

Json quat_list(std::span<const QuatElem> v) {
  Json a = Json::array();
  for (const auto& u : v) a.push_back(format_quat(u));
  return a;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (!j.is_string()) fail(ErrorCode::ParseError, "expected a rational string");
  return parse_rational(j.get<std::string>());
}

Json quat_json(const QuatElem& u) {
  return {{"x", rational_json(u.x())}, {"y", rational_json(u.y())}, {"z", rational_json(u.z())},
          {"t", rational_json(u.t())}};
}

QuatElem quat_from_json(const Json& j, const Algebra& alg) {
  if (j.is_string()) return parse_quat(j.get<std::string>(), alg);
  if (!j.is_object()) fail(ErrorCode::ParseError, "expected a quaternion object");
  try {
    return QuatElem(alg, rational_from_json(j.at("x")), rational_from_json(j.at("y")),
                    rational_from_json(j.at("z")), rational_from_json(j.at("t")));
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json padic_json(const PadicNum& x, long absolute) {
  const long prec = std::min(absolute, x.absolute_precision());
  const Integer& q = x.prime();
  Rational rep = 0;
  if (!x.is_zero() && x.valuation() < prec) {
    Integer u = floor_mod(x.unit(), ipow(q, static_cast<unsigned long>(prec - x.valuation())));
    rep = x.valuation() >= 0 ? Rational(u * ipow(q, static_cast<unsigned long>(x.valuation())))
                             : make_rational(u, ipow(q, static_cast<unsigned long>(-x.valuation())));
  }
  return {{"q", q.get_str()}, {"prec", prec}, {"residue", to_string(rep)}};
}

PadicNum padic_from_json(const Json& j) {
  try {
    Integer q(j.at("q").get<std::string>());
    long prec = j.at("prec").get<long>();
    Rational r = parse_rational(j.at("residue").get<std::string>());
    if (r == 0) return PadicNum::zero(q, prec);
    long v = valuation(r, q);
    if (v >= prec) return PadicNum::zero(q, prec);
    return PadicNum::from_rational(r, q, prec - v);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json lattice_json(const ZLattice4& l) {
  Json rows = Json::array();
  for (const auto& r : l.hnf_rows()) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.get_str());
    rows.push_back(row);
  }
  return {{"denominator", l.denominator().get_str()}, {"rows", rows}};
}

Json params_json(const AlgebraParams& params) {
  return {{"delta", params.delta()}, {"level", params.level()}, {"p", params.p()}, {"a", params.a()}};
}

Json construct_json(const AlgebraParams& params) {
  Json j = params_json(params);
  auto e = hashimoto_basis(params);
  j["algebra"] = {{"i2", to_string(params.algebra().i_sq)}, {"j2", to_string(params.algebra().j_sq)}};
  j["basis"] = quat_list(e);
  j["e4"] = format_quat(e[3]);
  j["discriminant"] = reduced_discriminant(e).get_str();
  return j;
}

Json splitting_json(const LocalSplitting& s) {
  Json j;
  j["case"] = split_case_name(s.kind);
  j["place"] = place_text(s.place);
  j["params"] = params_json(s.params);
  if (s.place != 0 && s.kind != SplitCase::Rational) j["precision"] = s.precision;
  const long prec = s.precision;
  if (s.x) j["x"] = padic_json(*s.x, prec);
  if (s.y) j["y"] = padic_json(*s.y, prec);
  if (s.omega) j["omega"] = padic_json(*s.omega, prec);
  if (s.root) j["root"] = padic_json(*s.root, prec);
  std::visit(
      [&](const auto& g) {
        j["images"] = {{"1", mat_json(g.one, prec)},
                       {"i", mat_json(g.i, prec)},
                       {"j", mat_json(g.j, prec)},
                       {"k", mat_json(g.k, prec)}};
      },
      s.images);
  return j;
}

Json degeneracy_json(const DegeneracyPair& d) {
  const auto& c = d.constants;
  Json k;
  k["case"] = degeneracy_case_name(c.kind);
  k["modulus"] = c.modulus.get_str();
  switch (c.kind) {
    case DegeneracyCase::Nonsquare:
      k["c1"] = c.c1.get_str();
      k["c2"] = c.c2.get_str();
      k["c3"] = c.c3.get_str();
      break;
    case DegeneracyCase::Square:
      k["c"] = c.c.get_str();
      k["c_prime"] = c.c_prime.get_str();
      break;
    case DegeneracyCase::AtP:
      k["c4"] = c.c4.get_str();
      k["c4_mod_p2"] = c.c4_sq.get_str();
      k["A"] = c.A.get_str();
      k["B"] = c.B.get_str();
      break;
  }
  Json j = params_json(d.params);
  j["q"] = d.q.get_str();
  j["f"] = quat_list(d.f);
  j["g"] = quat_list(d.g);
  j["constants"] = k;
  j["det_f"] = d.det_f.get_str();
  j["det_g"] = d.det_g.get_str();
  return j;
}

Json psi_json(const PsiMap& m) {
  const Algebra src = m.source.algebra();
  Json j;
  j["from"] = m.source.level();
  j["to"] = m.target.level();
  j["p"] = m.source.p();
  j["beta"] = rational_json(m.beta);
  j["delta"] = rational_json(m.delta);
  j["sign_flipped"] = m.sign_flipped;
  j["residual"] = rational_json(conic_residual(Integer(static_cast<long>(m.target.level())),
                                               Integer(static_cast<long>(m.source.p())),
                                               Integer(static_cast<long>(m.source.level())),
                                               {m.beta, m.delta}));
  j["images"] = {{"i", format_quat(apply_psi(m, QuatElem::i(src)))},
                 {"j", format_quat(apply_psi(m, QuatElem::j(src)))},
                 {"k", format_quat(apply_psi(m, QuatElem::k(src)))}};
  if (m.S) {
    PsiCoefficients c = psi_coefficients(m);
    j["coefficients"] = {{"A3", rational_json(c.A3)}, {"B3", rational_json(c.B3)},
                         {"C3", rational_json(c.C3)}, {"D3", rational_json(c.D3)},
                         {"A4", rational_json(c.A4)}, {"B4", rational_json(c.B4)},
                         {"C4", rational_json(c.C4)}, {"D4", rational_json(c.D4)}};
  }
  return j;
}

Json chain_json(const ChainBasis& c, long oracle_depth, bool stabilized) {
  Json j;
  j["case"] = chain_case_name(c.kind);
  j["delta"] = c.base.delta();
  j["p"] = c.base.p();
  j["q"] = c.q.get_str();
  j["basis"] = quat_list(c.generators);
  j["oracle_depth"] = oracle_depth;
  j["stabilized"] = stabilized;
  if (c.kind == ChainCase::NonsquareAuxiliary) {
    j["auxiliary_level"] = c.level.level();
    j["auxiliary_a"] = c.level.a();
    j["in_base"] = quat_list(c.in_base.basis());
  }
  return j;
}

Json report_json(const Report& r, bool vacuous) {
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"pass", c.pass}, {"witness", c.witness}});
    failed += c.pass ? 0 : 1;
  }
  Json j;
  j["checks"] = checks;
  j["passed"] = r.checks.size() - failed;
  j["failed"] = failed;
  j["vacuous"] = vacuous;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  try {
    for (const auto& c : j.at("checks"))
      r.add(c.at("id").get<std::string>(), c.at("anchor").get<std::string>(), c.at("pass").get<bool>(),
            c.at("witness").get<std::string>());
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return r;
}

std::string construct_text(const AlgebraParams& params) {
  std::ostringstream os;
  auto e = hashimoto_basis(params);
  os << "B = {" << to_string(params.algebra().i_sq) << ", " << params.p() << "}  (delta = " << params.delta()
     << ", N = " << params.level() << ")\n";
  os << "p = " << params.p() << ", a = " << params.a() << "\n";
  for (int h = 0; h < 4; ++h) os << "e" << h + 1 << " = " << format_quat(e[h]) << "\n";
  return os.str();
}

std::string splitting_text(const LocalSplitting& s) {
  std::ostringstream os;
  os << s.describe() << "\n";
  const long prec = s.precision;
  if (s.x) os << "x = " << entry_text(*s.x, prec) << "\n";
  if (s.y) os << "y = " << entry_text(*s.y, prec) << "\n";
  if (s.omega) os << "omega = " << entry_text(*s.omega, prec) << "\n";
  if (s.root) os << "root = " << entry_text(*s.root, prec) << "\n";
  std::visit(
      [&](const auto& g) {
        os << "phi(i) = " << mat_text(g.i, prec) << "\n";
        os << "phi(j) = " << mat_text(g.j, prec) << "\n";
        os << "phi(k) = " << mat_text(g.k, prec) << "\n";
      },
      s.images);
  return os.str();
}

std::string degeneracy_text(const DegeneracyPair& d) {
  std::ostringstream os;
  os << "delta = " << d.params.delta() << ", N = " << d.params.level() << ", p = " << d.params.p()
     << ", q = " << d.q << " (" << degeneracy_case_name(d.constants.kind) << ")\n";
  for (int h = 0; h < 4; ++h) os << "f" << h + 1 << " = " << format_quat(d.f[h]) << "\n";
  for (int h = 0; h < 4; ++h) os << "g" << h + 1 << " = " << format_quat(d.g[h]) << "\n";
  os << "det f = " << d.det_f << ", det g = " << d.det_g << "\n";
  return os.str();
}

std::string psi_text(const PsiMap& m) {
  std::ostringstream os;
  const Algebra src = m.source.algebra();
  os << "Psi: B(" << m.source.level() << ", " << m.source.p() << ") -> B(" << m.target.level() << ", "
     << m.source.p() << ")\n";
  os << "beta = " << to_string(m.beta) << ", delta = " << to_string(m.delta) << "\n";
  os << "i -> " << format_quat(apply_psi(m, QuatElem::i(src))) << "\n";
  os << "j -> " << format_quat(apply_psi(m, QuatElem::j(src))) << "\n";
  os << "k -> " << format_quat(apply_psi(m, QuatElem::k(src))) << "\n";
  return os.str();
}

std::string chain_text(const ChainBasis& c, long oracle_depth, bool stabilized) {
  std::ostringstream os;
  os << "q = " << c.q << " (" << chain_case_name(c.kind) << "), delta = " << c.base.delta()
     << ", p = " << c.base.p() << "\n";
  if (c.kind == ChainCase::NonsquareAuxiliary)
    os << "auxiliary level N = " << c.level.level() << ", a = " << c.level.a() << "\n";
  os << "basis: " << format_quat(c.generators[0]) << ", " << format_quat(c.generators[1]) << "\n";
  if (c.kind == ChainCase::NonsquareAuxiliary) {
    os << "in R(1):";
    for (const auto& u : c.in_base.basis()) os << " " << format_quat(u);
    os << "\n";
  }
  os << "oracle depth " << oracle_depth << ": " << (stabilized ? "stabilized" : "not stabilized") << "\n";
  return os.str();
}

std::string report_text(const Report& r, bool vacuous) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.anchor;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
    failed += c.pass ? 0 : 1;
  }
  os << r.checks.size() - failed << " passed, " << failed << " failed";
  if (vacuous) os << " (vacuous)";
  os << "\n";
  return os.str();
}

}  // namespace quatorder
