#include "quatorder/degeneracy.hpp"

#include <sstream>

namespace quatorder {

namespace {

IntMatrix rows_of(std::initializer_list<std::array<Integer, 4>> rows) {
  IntMatrix m;
  for (const auto& r : rows) m.push_back({r[0], r[1], r[2], r[3]});
  return m;
}

std::array<QuatElem, 4> apply_change(const std::array<QuatElem, 4>& e, const IntMatrix& m) {
  std::array<QuatElem, 4> out;
  for (int h = 0; h < 4; ++h) out[h] = combine(e, m[h]);
  return out;
}

Integer det_of(const IntMatrix& m) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : m) r.push_back(std::vector<Rational>(row.begin(), row.end()));
  return rational_det(r).get_num();
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::NotDivisible, a.get_str() + " is not invertible mod " + m.get_str());
  return floor_mod(inv, m);
}

}  // namespace

const char* degeneracy_case_name(DegeneracyCase c) {
  switch (c) {
    case DegeneracyCase::Nonsquare: return "nonsquare";
    case DegeneracyCase::Square: return "square";
    case DegeneracyCase::AtP: return "at-p";
  }
  return "?";
}

DegeneracyPair degeneracy_bases(const AlgebraParams& params, const Integer& q, long precision,
                                SplitOptions options) {
  if (q == 0) fail(ErrorCode::InvalidParameters, "degeneracy needs a finite prime");
  SplitCase sc = classify_place(params, q);
  if (sc == SplitCase::Ramified)
    fail(ErrorCode::RamifiedPlace, q.get_str() + " divides the discriminant");
  LocalSplitting s = build_splitting(params, q, precision, options);

  const Integer dn = params.delta_level();
  const Integer a(static_cast<long>(params.a()));
  const Integer p(static_cast<long>(params.p()));
  const Integer adn = a * dn;
  DegeneracyPair out;
  out.params = params;
  out.q = q;
  DegeneracyConstants& k = out.constants;
  k.modulus = q;

  switch (sc) {
    case SplitCase::UnramNonsquare: {
      if (dn % q == 0)
        fail(ErrorCode::Unsupported, "nonsquare case with q | N has no basis here");
      k.kind = DegeneracyCase::Nonsquare;
      k.c1 = (*s.y - *s.x).residue(1);
      k.c2 = inverse_mod(p, q);
      k.c3 = s.x->residue(1);
      out.f_change = rows_of({{1, 0, 0, 0}, {0, -k.c1, 1, 0}, {0, -2 * k.c2 * (adn - k.c3), 0, 1},
                              {0, q, 0, 0}});
      out.g_change = rows_of({{1, 0, 0, 0}, {0, k.c1, 1, 0}, {0, -2 * k.c2 * (adn + k.c3), 0, 1},
                              {0, q, 0, 0}});
      break;
    }
    case SplitCase::Rational:
    case SplitCase::UnramSquare: {
      k.kind = DegeneracyCase::Square;
      if (sc == SplitCase::Rational) {
        // p = 1 with sqrt p = 1.
        k.c = 0;
        k.c_prime = floor_mod(Integer(1), q);
      } else {
        PadicNum pp = PadicNum::from_integer(p, q, s.digits);
        PadicNum half = PadicNum::from_rational(Rational(1, 2), q, s.digits);
        k.c = (half * (pp - *s.omega)).residue(1);
        k.c_prime = (half * (pp + *s.omega)).residue(1);
      }
      out.f_change = rows_of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -k.c}, {0, 0, 0, q}});
      out.g_change = rows_of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -k.c_prime}, {0, 0, 0, q}});
      break;
    }
    case SplitCase::AtP: {
      k.kind = DegeneracyCase::AtP;
      k.c4 = s.root->residue(1);
      k.c4_sq = s.root->residue(2);
      Bezout bz = extended_gcd(p, 2 * (adn + k.c4));
      if (bz.gcd != 1) fail(ErrorCode::NotDivisible, "p divides 2*(a*delta*N + c4)");
      k.A = bz.s;
      k.B = bz.t;
      Integer num = adn - k.c4_sq;
      if (num % p != 0) fail(ErrorCode::NotDivisible, "p does not divide a*delta*N - c4");
      out.f_change = rows_of({{1, 0, 0, 0}, {0, -k.c4, 1, 0}, {0, -2 * (adn + k.c4), 0, p},
                              {0, p * k.A, 0, p * k.B}});
      out.g_change =
          rows_of({{1, 0, 0, 0}, {0, k.c4, 1, 0}, {0, -2 * (num / p), 0, 1}, {0, p, 0, 0}});
      break;
    }
    default:
      fail(ErrorCode::Unsupported, "no degeneracy basis at this place");
  }
  auto e = hashimoto_basis(params);
  out.f = apply_change(e, out.f_change);
  out.g = apply_change(e, out.g_change);
  out.det_f = det_of(out.f_change);
  out.det_g = det_of(out.g_change);
  return out;
}

ZLattice4 congruence_kernel(std::span<const QuatElem> basis, const std::vector<Integer>& residues,
                            const Integer& modulus) {
  if (basis.size() != residues.size() || basis.empty())
    fail(ErrorCode::InvalidParameters, "one residue per basis element");
  const std::size_t n = basis.size();
  IntMatrix form(1);
  for (const auto& r : residues) form[0].push_back(r);
  form[0].push_back(modulus);
  IntMatrix ker = right_kernel(form, n + 1);
  IntMatrix coords;
  for (auto& v : ker) coords.emplace_back(v.begin(), v.begin() + static_cast<long>(n));
  coords = hnf(coords, n);
  std::vector<QuatElem> gens;
  for (const auto& c : coords) gens.push_back(combine(basis, c));
  return ZLattice4(basis[0].algebra(), gens);
}

ZLattice4 degeneracy_oracle(const LocalSplitting& s, bool upper_right) {
  auto e = hashimoto_basis(s.params);
  const long m = upper_right ? 1 : s.level_valuation() + 1;
  std::vector<Integer> r;
  for (const auto& u : e)
    r.push_back(upper_right ? entry_residue(s, u, 0, 1, m) : entry_residue(s, u, 1, 0, m));
  return congruence_kernel(e, r, ipow(s.place, static_cast<unsigned long>(m)));
}

Report verify_degeneracy(const DegeneracyPair& pair, const LocalSplitting& s) {
  if (!(s.params == pair.params) || s.place != pair.q)
    fail(ErrorCode::InvalidParameters, "splitting does not match the degeneracy data");
  Report rep;
  const auto& k = pair.constants;
  const std::string pre = std::string("degeneracy.") + degeneracy_case_name(k.kind) + ".";
  std::ostringstream w;
  w << "delta=" << pair.params.delta() << ", N=" << pair.params.level() << ", p=" << pair.params.p()
    << ", q=" << pair.q;
  const std::string wit = w.str();
  const Integer expect_det = k.kind == DegeneracyCase::AtP ? Integer(static_cast<long>(pair.params.p())) : pair.q;

  rep.add(pre + "det_f", "|det| of the f change of basis is q (p at p)", abs(pair.det_f) == expect_det,
          wit + ", det " + pair.det_f.get_str());
  rep.add(pre + "det_g", "|det| of the g change of basis is q (p at p)", abs(pair.det_g) == expect_det,
          wit + ", det " + pair.det_g.get_str());
  if (k.kind == DegeneracyCase::AtP) {
    Integer adn = pair.params.delta_level() * static_cast<long>(pair.params.a());
    Integer p(static_cast<long>(pair.params.p()));
    rep.add(pre + "bezout", "A*p + 2*B*(a*delta*N + c4) = 1", k.A * p + 2 * k.B * (adn + k.c4) == 1,
            wit + ", (A,B) = (" + k.A.get_str() + "," + k.B.get_str() + ")");
  }

  const Algebra alg = pair.params.algebra();
  ZLattice4 order = hashimoto_order(pair.params);
  ZLattice4 F(alg, pair.f), G(alg, pair.g);
  const Integer disc = pair.params.delta_level() * pair.q;
  const long v = s.level_valuation();

  auto lattice_checks = [&](const std::string& tag, const ZLattice4& L,
                            const std::array<QuatElem, 4>& b, bool upper) {
    rep.add(pre + tag + "_in_order", "the sublattice lies in R(N)", order.contains(L), wit);
    rep.add(pre + tag + "_closed", "the sublattice is a ring containing 1",
            L.is_multiplicatively_closed() && L.contains(QuatElem::one(alg)), wit);
    Rational idx = order.index_of(L);
    rep.add(pre + tag + "_index", "index in R(N) is q (p at p)", idx == Rational(expect_det),
            wit + ", index " + to_string(idx));
    Integer d = 0;
    bool ok = true;
    try {
      d = reduced_discriminant(b);
    } catch (const Error&) {
      ok = false;
    }
    rep.add(pre + tag + "_discriminant", "reduced discriminant delta*N*q", ok && d == disc,
            wit + ", disc " + d.get_str());
    bool shape = true;
    for (const auto& u : b) {
      if (!in_local_order(s, embed_element(s, u))) shape = false;
      if (upper ? entry_residue(s, u, 0, 1, 1) != 0 : entry_residue(s, u, 1, 0, v + 1) != 0)
        shape = false;
    }
    rep.add(pre + tag + "_shape",
            upper ? "images have upper-right entry = 0 mod q" : "images have lower-left entry = 0 mod qN",
            shape, wit);
    ZLattice4 oracle = degeneracy_oracle(s, upper);
    rep.add(pre + tag + "_oracle", "equals the congruence-kernel lattice", oracle == L, wit);
  };
  lattice_checks("f", F, pair.f, false);
  lattice_checks("g", G, pair.g, true);

  Rational both = order.index_of(lattice_intersect(F, G));
  rep.add(pre + "fg_index", "f and g lattices meet in index q^2",
          both == Rational(expect_det * expect_det), wit + ", index " + to_string(both));
  return rep;
}

}  // namespace quatorder
