#include "quatorder/chains.hpp"

#include <numeric>
#include <sstream>

#include "quatorder/degeneracy.hpp"
#include "quatorder/hnf.hpp"
#include "quatorder/isomap.hpp"

namespace quatorder {

namespace {

std::vector<Integer> int_coords(std::span<const QuatElem> basis, const QuatElem& u) {
  auto c = coordinates_in(basis, u);
  std::vector<Integer> out;
  for (const auto& x : c) {
    if (!is_integer(x)) fail(ErrorCode::InvalidParameters, "element is not in the order");
    out.push_back(x.get_num());
  }
  return out;
}

/// R(1) intersected with the rational span of `gens`.
ZLattice4 saturate_in(const AlgebraParams& params, std::span<const QuatElem> gens) {
  auto e = hashimoto_basis(params);
  IntMatrix rows;
  for (const auto& g : gens) rows.push_back(int_coords(e, g));
  std::vector<QuatElem> out;
  for (const auto& r : saturate(rows, 4)) out.push_back(combine(e, r));
  return ZLattice4(params.algebra(), out);
}

SplitOptions options_for(const ChainBasis& c) {
  SplitOptions o;
  o.diagonal_norm_solution =
      c.kind == ChainCase::NonsquareDirect || c.kind == ChainCase::NonsquareAuxiliary;
  return o;
}

std::string witness(const ChainBasis& c) {
  std::ostringstream os;
  os << "delta=" << c.base.delta() << ", p=" << c.base.p() << ", q=" << c.q << ", level "
     << c.level.level();
  return os.str();
}

}  // namespace

const char* chain_case_name(ChainCase c) {
  switch (c) {
    case ChainCase::NonsquareDirect: return "nonsquare";
    case ChainCase::NonsquareAuxiliary: return "nonsquare-auxiliary";
    case ChainCase::Square: return "square";
    case ChainCase::AtP: return "at-p";
  }
  return "?";
}

ChainBasis chain_closed_form(std::int64_t delta, const Integer& q, std::int64_t aux_bound,
                             std::int64_t prime_bound) {
  if (delta == 1) fail(ErrorCode::Unsupported, "chains need a division algebra (delta > 1)");
  ChainBasis c;
  c.q = q;
  c.base = AlgebraParams::hashimoto(delta, 1, prime_bound);
  SplitCase sc = classify_place(c.base, q);
  if (sc == SplitCase::Ramified) fail(ErrorCode::RamifiedPlace, q.get_str() + " divides the discriminant");
  if (sc == SplitCase::Archimedean) fail(ErrorCode::InvalidParameters, "chains need a finite prime");
  const Integer d(static_cast<long>(delta));
  c.level = c.base;
  switch (sc) {
    case SplitCase::UnramSquare: c.kind = ChainCase::Square; break;
    case SplitCase::AtP: c.kind = ChainCase::AtP; break;
    case SplitCase::UnramNonsquare:
      if (is_padic_unit_square(-d, q)) {
        c.kind = ChainCase::NonsquareDirect;
      } else {
        c.kind = ChainCase::NonsquareAuxiliary;
        std::int64_t found = 0;
        for (std::int64_t n = 2; n <= aux_bound && !found; ++n) {
          if (Integer(static_cast<long>(n)) % q == 0) continue;
          if (!satisfies_hashimoto_conditions(delta, n, c.base.p())) continue;
          if (std::gcd(n, delta) != 1) continue;
          if (is_padic_unit_square(-d * static_cast<long>(n), q)) found = n;
        }
        if (!found)
          fail(ErrorCode::SearchExhausted,
               "no auxiliary level up to " + std::to_string(aux_bound) + " for q = " + q.get_str());
        c.level = AlgebraParams::with_prime(delta, found, c.base.p());
      }
      break;
    default: fail(ErrorCode::Unsupported, "no chain description at this place");
  }

  auto e = hashimoto_basis(c.level);
  QuatElem second;
  if (c.kind == ChainCase::Square) {
    second = e[1];
  } else {
    const Integer adn = c.level.delta_level() * static_cast<long>(c.level.a());
    std::vector<Integer> k = {0, -2 * adn, -2, Integer(static_cast<long>(c.level.p()))};
    second = combine(e, k);
  }
  c.generators = {e[0], second};
  c.lattice = ZLattice4(c.level.algebra(), c.generators);
  if (c.kind == ChainCase::NonsquareAuxiliary) {
    PsiMap m = build_psi(c.level, 1);
    std::array<QuatElem, 2> pulled = {apply_psi(m, c.generators[0]), apply_psi(m, c.generators[1])};
    c.in_base = saturate_in(c.base, pulled);
  } else {
    c.in_base = c.lattice;
  }
  return c;
}

LocalSplitting chain_splitting(const ChainBasis& c, long precision) {
  return build_splitting(c.level, c.q, precision, options_for(c));
}

ZLattice4 chain_oracle(const ChainBasis& c, long depth, long precision) {
  if (depth < 0) fail(ErrorCode::InvalidParameters, "depth must be non-negative");
  if (precision <= depth + 4)
    fail(ErrorCode::PrecisionLoss, "precision " + std::to_string(precision) +
                                       " is too low for depth " + std::to_string(depth));
  auto e = hashimoto_basis(c.level);
  if (depth == 0) return ZLattice4(c.level.algebra(), e);
  LocalSplitting s = chain_splitting(c, precision);
  std::vector<Integer> r;
  for (const auto& u : e) r.push_back(entry_residue(s, u, 1, 0, depth));
  return congruence_kernel(e, r, ipow(c.q, static_cast<unsigned long>(depth)));
}

ZLattice4 chain_limit(const ChainBasis& c) {
  LocalSplitting s = chain_splitting(c, kDefaultPrecision);
  GeneratorImages<QuadRat> g = symbolic_images(s);
  auto e = hashimoto_basis(c.level);
  // Rational and sqrt parts of the lower-left entry must both vanish.
  std::vector<std::vector<Rational>> rows(2);
  for (const auto& u : e) {
    QuadRat ll = embed_symbolic(g, u).c;
    rows[0].push_back(ll.a());
    rows[1].push_back(ll.b());
  }
  IntMatrix m;
  for (auto& row : rows) {
    Integer den = 1;
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ir;
    for (const auto& x : row) ir.push_back(Rational(x * den).get_num());
    m.push_back(ir);
  }
  std::vector<QuatElem> gens;
  for (const auto& k : right_kernel(m, 4)) gens.push_back(combine(e, k));
  return ZLattice4(c.level.algebra(), gens);
}

ZLattice4 pairwise_intersection(const ChainBasis& a, const ChainBasis& b) {
  if (!(a.base == b.base)) fail(ErrorCode::AmbientMismatch, "chains over different base algebras");
  return lattice_intersect(a.in_base, b.in_base);
}

void check_pairwise_hypotheses(const ChainBasis& q, const ChainBasis& s, const ChainBasis& p) {
  if (q.kind != ChainCase::Square)
    fail(ErrorCode::CaseMismatch, "q = " + q.q.get_str() + " must have p a square mod q");
  if (s.kind != ChainCase::NonsquareDirect && s.kind != ChainCase::NonsquareAuxiliary)
    fail(ErrorCode::CaseMismatch, "s = " + s.q.get_str() + " must have p a nonsquare mod s");
  if (p.kind != ChainCase::AtP) fail(ErrorCode::CaseMismatch, "third prime must be p");
  if (!(q.base == s.base) || !(s.base == p.base))
    fail(ErrorCode::AmbientMismatch, "chains over different base algebras");
}

ZLattice4 global_intersection(std::span<const ChainBasis> chains) {
  if (chains.empty()) fail(ErrorCode::InvalidParameters, "no chains to intersect");
  ZLattice4 acc = chains[0].in_base;
  for (std::size_t n = 1; n < chains.size(); ++n) {
    if (!(chains[n].base == chains[0].base))
      fail(ErrorCode::AmbientMismatch, "chains over different base algebras");
    acc = lattice_intersect(acc, chains[n].in_base);
  }
  return acc;
}

std::vector<QuatElem> norm_one_elements(const ZLattice4& l) {
  auto b = l.basis();
  std::vector<QuatElem> out;
  if (b.empty()) return out;
  if (b.size() == 1) {
    // n(x*b) = x^2 n(b)
    Rational n = b[0].reduced_norm();
    Rational x2 = n == 0 ? Rational(0) : 1 / n;
    Rational x;
    if (x2 > 0 && is_integer(x2) && is_rational_square(x2, &x)) {
      out.push_back(x * b[0]);
      out.push_back(-x * b[0]);
    }
    return out;
  }
  if (b.size() != 2) fail(ErrorCode::Unsupported, "norm-one search needs rank at most 2");
  const Rational n1 = b[0].reduced_norm(), n2 = b[1].reduced_norm();
  const Rational t = (b[0] + b[1]).reduced_norm() - n1 - n2;
  const Rational disc = 4 * n1 * n2 - t * t;
  if (n1 <= 0 || disc <= 0) fail(ErrorCode::Unsupported, "norm form is not positive definite");
  // n1 x^2 + t x y + n2 y^2 = 1 forces y^2 <= 4 n1 / disc.
  Rational ybound = 4 * n1 / disc;
  for (long y = 0; Rational(y * y) <= ybound; ++y) {
    for (long sy : {y, -y}) {
      if (y == 0 && sy != 0) continue;
      Rational Y(sy);
      Rational dq = t * t * Y * Y - 4 * n1 * (n2 * Y * Y - 1);
      Rational root;
      if (dq < 0 || !is_rational_square(dq, &root)) continue;
      for (const Rational& r : {root, Rational(-root)}) {
        Rational x = (-t * Y + r) / (2 * n1);
        if (!is_integer(x)) continue;
        QuatElem u = x * b[0] + Y * b[1];
        bool seen = false;
        for (const auto& v : out) seen = seen || v == u;
        if (!seen && u.reduced_norm() == 1) out.push_back(u);
      }
      if (y == 0) break;
    }
  }
  return out;
}

Report verify_chain(const ChainBasis& c, std::span<const long> depths, long precision) {
  Report rep;
  const std::string pre = std::string("chain.") + chain_case_name(c.kind) + ".";
  const std::string wit = witness(c);
  ZLattice4 order = hashimoto_order(c.level);
  const Algebra alg = c.level.algebra();

  rep.add(pre + "rank", "closed form has rank 2, contains 1 and lies in the order",
          c.lattice.rank() == 2 && c.lattice.contains(QuatElem::one(alg)) && order.contains(c.lattice),
          wit);
  ZLattice4 limit = chain_limit(c);
  rep.add(pre + "limit", "exact lower-left = 0 kernel equals the closed form", limit == c.lattice,
          wit + ", limit rank " + std::to_string(limit.rank()));

  for (long n : depths) {
    const std::string at = wit + ", depth " + std::to_string(n);
    ZLattice4 L = chain_oracle(c, n, precision);
    ZLattice4 next = chain_oracle(c, n + 1, precision + 1);
    rep.add(pre + "contains_closed_form", "closed form lies in every finite chain member",
            L.contains(c.lattice), at);
    rep.add(pre + "monotone", "depth n+1 member lies in depth n member", L.contains(next), at);
    Rational idx = order.index_of(L);
    rep.add(pre + "index", "finite member has index q^n",
            idx == Rational(ipow(c.q, static_cast<unsigned long>(n))), at + ", index " + to_string(idx));
    ZLattice4 meet = lattice_intersect(L, limit);
    rep.add(pre + "stable_part", "finite member meets the limit span in the closed form",
            meet == c.lattice, at);
  }

  DegeneracyPair d = degeneracy_bases(c.level, c.q, precision, options_for(c));
  rep.add(pre + "depth_one", "depth-1 member equals the degeneracy f-lattice",
          chain_oracle(c, 1, precision) == ZLattice4(alg, d.f), wit);
  if (c.kind == ChainCase::NonsquareAuxiliary)
    rep.add(pre + "pullback_rank", "pullback to R(1) has rank 2", c.in_base.rank() == 2, wit);
  return rep;
}

}  // namespace quatorder
