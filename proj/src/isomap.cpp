#include "quatorder/isomap.hpp"

#include <sstream>

namespace quatorder {

namespace {

std::string pair_witness(const PsiMap& m) {
  std::ostringstream os;
  os << "delta=" << m.source.delta() << ", N=" << m.source.level() << " -> M=" << m.target.level()
     << ", p=" << m.source.p() << ", beta=" << to_string(m.beta) << ", delta'=" << to_string(m.delta);
  return os.str();
}

std::optional<Integer> residue_mod(const Rational& r, const Integer& p) {
  Integer inv;
  Integer den = r.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) return std::nullopt;
  return floor_mod(r.get_num() * inv, p);
}

}  // namespace

ConicSolution solve_conic(const Integer& M, const Integer& p, const Integer& N, long bound) {
  if (M <= 0 || N <= 0 || p <= 0) fail(ErrorCode::InvalidParameters, "conic needs positive M, N, p");
  if (bound < 1) fail(ErrorCode::InvalidParameters, "search bound must be positive");
  for (long w = 1; w <= bound; ++w) {
    const Integer nw2 = N * w * w;
    for (long u = 0; u <= bound; ++u) {
      Integer num = nw2 + p * M * u * u;
      if (num % M != 0) continue;
      Integer v;
      if (!is_perfect_square(num / M, &v) || v == 0) continue;
      return {make_rational(v, w), make_rational(u, w)};
    }
  }
  fail(ErrorCode::SearchExhausted, "no conic solution with denominator and numerator up to " +
                                       std::to_string(bound));
}

Rational conic_residual(const Integer& M, const Integer& p, const Integer& N,
                        const ConicSolution& s) {
  return Rational(M) * s.beta * s.beta - Rational(p * M) * s.delta * s.delta - Rational(N);
}

PsiMap build_psi(const AlgebraParams& source, std::int64_t target_level, long bound) {
  PsiMap m;
  m.source = source;
  m.target = source.is_split_case()
                 ? AlgebraParams::with_prime(1, target_level, 1)
                 : AlgebraParams::with_prime(source.delta(), target_level, source.p());
  const Integer N(static_cast<long>(source.level()));
  const Integer M(static_cast<long>(target_level));
  const Integer p(static_cast<long>(source.p()));
  if (N % M == 0) m.S = N / M;
  if (source.is_split_case()) {
    m.beta = make_rational(M + N, 2 * M);
    m.delta = make_rational(M - N, 2 * M);
    return m;
  }
  ConicSolution c = solve_conic(M, p, N, bound);
  m.beta = c.beta;
  m.delta = c.delta;
  auto b = residue_mod(m.beta, p);
  if (b && m.S) {
    Integer aN(static_cast<long>(source.a())), aM(static_cast<long>(m.target.a()));
    if (floor_mod(aN * *b - aM, p) != 0) {
      m.beta = -m.beta;
      m.sign_flipped = true;
    }
  }
  return m;
}

QuatElem apply_psi(const PsiMap& m, const QuatElem& u) {
  if (!(u.algebra() == m.source.algebra()))
    fail(ErrorCode::AmbientMismatch, "element is not in the source algebra");
  const Algebra alg = m.target.algebra();
  const Rational p(m.source.p());
  const auto& c = u.coeffs();
  // x + y*(beta i + delta k) + z*j + t*(p delta i + beta k)
  return QuatElem(alg, c[0], c[1] * m.beta + c[3] * p * m.delta, c[2],
                  c[1] * m.delta + c[3] * m.beta);
}

PsiCoefficients psi_coefficients(const PsiMap& m) {
  if (!m.S) fail(ErrorCode::NotDivisible, "coefficient formulas need M | N");
  const Rational p(m.source.p());
  const Rational dM(m.target.delta_level());
  const Rational aM(m.target.a()), aN(m.source.a());
  const Rational S(*m.S);
  const Rational& b = m.beta;
  const Rational& d = m.delta;
  PsiCoefficients k;
  k.A3 = Rational(1, 2) * d * (1 - p) * aM * dM;
  k.B3 = d * (p - 1) * aM * dM;
  k.C3 = d * p + b;
  k.D3 = d * p * (1 - p) / 2;
  k.B4 = 2 / p * (dM * (aN * S - aM * b + p * d * aM));
  k.A4 = -k.B4 / 2;
  k.C4 = 2 * d;
  k.D4 = b - p * d;
  return k;
}

Report verify_psi(const PsiMap& m) {
  Report rep;
  const std::string wit = pair_witness(m);
  const Algebra src = m.source.algebra();
  const Integer M(static_cast<long>(m.target.level()));
  const Integer N(static_cast<long>(m.source.level()));
  const Integer p(static_cast<long>(m.source.p()));
  Rational res = conic_residual(M, p, N, {m.beta, m.delta});
  rep.add("psi.conic_residual", "M*beta^2 - p*M*delta^2 = N", res == 0, wit + ", residual " + to_string(res));
  QuatElem hi = apply_psi(m, QuatElem::i(src));
  QuatElem hj = apply_psi(m, QuatElem::j(src));
  const Algebra tgt = m.target.algebra();
  rep.add("psi.i_squared", "Psi(i)^2 = -delta*N",
          hi * hi == QuatElem::scalar(tgt, Rational(-m.source.delta_level())), wit);
  rep.add("psi.j_squared", "Psi(j)^2 = p", hj * hj == QuatElem::scalar(tgt, Rational(p)), wit);
  rep.add("psi.anticommute", "Psi(i)Psi(j) = -Psi(j)Psi(i)", hi * hj == -(hj * hi), wit);
  rep.add("psi.k_image", "Psi(k) = Psi(i)Psi(j)", apply_psi(m, QuatElem::k(src)) == hi * hj, wit);
  if (!m.source.is_split_case() && m.S) {
    auto b = residue_mod(m.beta, p);
    Integer aN(static_cast<long>(m.source.a())), aM(static_cast<long>(m.target.a()));
    bool ok = b && floor_mod(aN * *b - aM, p) == 0;
    rep.add("psi.a_normalization", "a_M = a_N*beta mod p", ok,
            wit + ", a_N=" + aN.get_str() + ", a_M=" + aM.get_str());
  }
  return rep;
}

Report verify_psi_inclusion(const PsiMap& m) {
  if (!m.S)
    fail(ErrorCode::NotDivisible, "inclusion needs M | N (M = " + std::to_string(m.target.level()) +
                                      ", N = " + std::to_string(m.source.level()) + ")");
  Report rep;
  const std::string wit = pair_witness(m);
  auto src = hashimoto_basis(m.source);
  auto tgt = hashimoto_basis(m.target);
  ZLattice4 order = hashimoto_order(m.target);
  bool inside = true;
  for (const auto& e : src) inside = inside && order.contains(apply_psi(m, e));
  rep.add("psi.inclusion", "Psi(R(N)) lies in R(M) (HNF membership)", inside, wit);

  PsiCoefficients k = psi_coefficients(m);
  const Rational all[8] = {k.A3, k.B3, k.C3, k.D3, k.A4, k.B4, k.C4, k.D4};
  bool integral = true;
  for (const auto& x : all) integral = integral && is_integer(x);
  std::string coeffs;
  for (const auto& x : all) coeffs += (coeffs.empty() ? "" : ",") + to_string(x);
  rep.add("psi.coefficients_integral", "A3..D4 are integers", integral, wit + ", [" + coeffs + "]");
  rep.add("psi.b4_relation", "B4 = -2*A4", k.B4 == -2 * k.A4, wit);

  auto c3 = coordinates_in(tgt, apply_psi(m, src[2]));
  auto c4 = coordinates_in(tgt, apply_psi(m, src[3]));
  bool e1e2 = apply_psi(m, src[0]) == tgt[0] && apply_psi(m, src[1]) == tgt[1];
  bool match = e1e2 && c3[0] == k.A3 && c3[1] == k.B3 && c3[2] == k.C3 && c3[3] == k.D3 &&
               c4[0] == k.A4 && c4[1] == k.B4 && c4[2] == k.C4 && c4[3] == k.D4;
  rep.add("psi.coefficients_match", "closed formulas agree with solved coordinates", match, wit);
  return rep;
}

}  // namespace quatorder
