#include "quatorder/split.hpp"

#include <array>
#include <sstream>

namespace quatorder {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

struct LiftCtx {
  Integer q;
  long digits;
  Integer p;
};

template <class T>
T lift(const Rational& r, const LiftCtx& c);

template <>
Rational lift<Rational>(const Rational& r, const LiftCtx&) {
  return r;
}
template <>
PadicNum lift<PadicNum>(const Rational& r, const LiftCtx& c) {
  return PadicNum::from_rational(r, c.q, c.digits);
}
template <>
PadicQuad lift<PadicQuad>(const Rational& r, const LiftCtx& c) {
  return {PadicNum::from_rational(r, c.q, c.digits), PadicNum::zero(c.q, c.digits), c.p};
}
template <>
QuadRat lift<QuadRat>(const Rational& r, const LiftCtx&) {
  return {r, 0, 0};
}

LiftCtx ctx_of(const LocalSplitting& s) {
  return {s.place, s.digits, Integer(static_cast<long>(s.params.p()))};
}

template <class T>
Mat2<T> embed_with(const GeneratorImages<T>& g, const QuatElem& u, const LiftCtx& c) {
  const auto& k = u.coeffs();
  return lift<T>(k[0], c) * g.one + lift<T>(k[1], c) * g.i + lift<T>(k[2], c) * g.j +
         lift<T>(k[3], c) * g.k;
}

template <class T>
GeneratorImages<T> complete(const T& zero, const T& one, Mat2<T> i, Mat2<T> j) {
  Mat2<T> id{one, zero, zero, one};
  Mat2<T> k = i * j;
  return {id, std::move(i), std::move(j), std::move(k)};
}

bool same(const Rational& a, const Rational& b, long) { return a == b; }
bool same(const QuadRat& a, const QuadRat& b, long) { return a == b; }
bool same(const PadicNum& a, const PadicNum& b, long level) { return congruent(a, b, level); }
bool same(const PadicQuad& a, const PadicQuad& b, long level) {
  return congruent(a.a(), b.a(), level) && congruent(a.b(), b.b(), level);
}

template <class T>
bool same(const Mat2<T>& x, const Mat2<T>& y, long level) {
  return same(x.a, y.a, level) && same(x.b, y.b, level) && same(x.c, y.c, level) &&
         same(x.d, y.d, level);
}

template <class T>
T det4(const std::array<std::array<T, 4>, 4>& m) {
  // Division-free Laplace expansion along the first row.
  auto det3 = [&](int skip) -> T {
    int cols[3];
    for (int c = 0, n = 0; c < 4; ++c)
      if (c != skip) cols[n++] = c;
    const auto& r1 = m[1];
    const auto& r2 = m[2];
    const auto& r3 = m[3];
    return r1[cols[0]] * (r2[cols[1]] * r3[cols[2]] - r2[cols[2]] * r3[cols[1]]) -
           r1[cols[1]] * (r2[cols[0]] * r3[cols[2]] - r2[cols[2]] * r3[cols[0]]) +
           r1[cols[2]] * (r2[cols[0]] * r3[cols[1]] - r2[cols[1]] * r3[cols[0]]);
  };
  T out = m[0][0] * det3(0);
  out = out - m[0][1] * det3(1);
  out = out + m[0][2] * det3(2);
  out = out - m[0][3] * det3(3);
  return out;
}

Integer residue_of(const Rational& r, const Integer& q, long m) {
  Integer mod = ipow(q, static_cast<unsigned long>(m));
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), r.get_den_mpz_t(), mod.get_mpz_t()) == 0)
    fail(ErrorCode::NotDivisible, "entry " + to_string(r) + " is not integral at " + q.get_str());
  return floor_mod(r.get_num() * inv, mod);
}

std::string place_name(const Integer& place) { return place == 0 ? "inf" : place.get_str(); }

}  // namespace

PadicNum PadicQuad::norm() const { return a_ * a_ - PadicNum::from_integer(p_, a_.prime(), a_.relative_precision() + 1) * b_ * b_; }

bool PadicQuad::is_integral() const {
  if (a_.prime() != 2) return a_.is_integral() && b_.is_integral();
  PadicNum two = PadicNum::from_integer(2, 2, 8);
  return (two * b_).is_integral() && (a_ - b_).is_integral();
}

PadicQuad operator*(const PadicQuad& x, const PadicQuad& y) {
  PadicNum p = PadicNum::from_integer(x.p_, x.a_.prime(), 64);
  return {x.a_ * y.a_ + p * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.p_};
}

const char* split_case_name(SplitCase c) {
  switch (c) {
    case SplitCase::Rational: return "rational";
    case SplitCase::UnramNonsquare: return "unram-nonsquare";
    case SplitCase::UnramSquare: return "unram-square";
    case SplitCase::AtP: return "at-p";
    case SplitCase::Ramified: return "ramified";
    case SplitCase::Archimedean: return "archimedean";
  }
  return "?";
}

long LocalSplitting::level_valuation() const {
  if (place == 0) return 0;
  return valuation(Integer(static_cast<long>(params.level())), place);
}

std::string LocalSplitting::describe() const {
  std::ostringstream os;
  os << split_case_name(kind) << " at " << place_name(place) << " for (delta=" << params.delta()
     << ", N=" << params.level() << ", p=" << params.p() << ", a=" << params.a()
     << "), precision " << precision;
  return os.str();
}

SplitCase classify_place(const AlgebraParams& params, const Integer& place) {
  if (place != 0 && (place < 0 || !is_prime(place)))
    fail(ErrorCode::NotAPrime, place.get_str() + " is not a prime");
  if (params.is_split_case()) return SplitCase::Rational;
  if (place == 0) return SplitCase::Archimedean;
  const Integer p(static_cast<long>(params.p()));
  if (Integer(static_cast<long>(params.delta())) % place == 0) return SplitCase::Ramified;
  if (place == p) return SplitCase::AtP;
  if (place != 2) return legendre(p, place) == 1 ? SplitCase::UnramSquare : SplitCase::UnramNonsquare;
  if (floor_mod(p, 8) == 1) return SplitCase::UnramSquare;
  fail(ErrorCode::Unsupported,
       "q = 2 with p = " + p.get_str() + " (not 1 mod 8) and 2 unramified has no splitting here");
}

LocalSplitting build_splitting(const AlgebraParams& params, const Integer& place, long precision,
                               SplitOptions options) {
  if (precision < 1) fail(ErrorCode::InvalidParameters, "precision must be positive");
  SplitCase kind = classify_place(params, place);
  if (options.expect && *options.expect != kind)
    fail(ErrorCode::CaseMismatch, std::string("place ") + place_name(place) + " is " +
                                      split_case_name(kind) + ", not " +
                                      split_case_name(*options.expect));
  LocalSplitting s;
  s.kind = kind;
  s.place = place;
  s.params = params;
  s.precision = precision;
  s.digits = precision + kGuardDigits;
  const Integer dn = params.delta_level();
  const Integer p(static_cast<long>(params.p()));
  const long D = s.digits;

  switch (kind) {
    case SplitCase::Rational: {
      const Rational N(params.level());
      s.images = complete<Rational>(0, 1, {0, -1, N, 0}, {-1, 0, 0, 1});
      break;
    }
    case SplitCase::Archimedean: {
      QuadRat r = QuadRat::sqrt_of(p);
      QuadRat z(0, 0, 0), one(1, 0, 0), ndn(Rational(-dn), 0, 0);
      s.images = complete<QuadRat>(z, one, {z, one, ndn, z}, {r, z, z, -r});
      break;
    }
    case SplitCase::UnramNonsquare: {
      PadicNum x, y;
      if (options.diagonal_norm_solution) {
        if (!is_padic_unit_square(-dn, place))
          fail(ErrorCode::CaseMismatch, "-delta*N is not a square mod " + place.get_str());
        x = hensel_sqrt(PadicNum::from_integer(-dn, place, D + 1), D);
        y = PadicNum::zero(place, D);
      } else {
        NormSolution ns = solve_norm_equation(p, Rational(-dn), place, D);
        x = ns.x;
        y = ns.y;
      }
      PadicNum z = PadicNum::zero(place, D), one = PadicNum::from_integer(1, place, D);
      PadicNum pp = PadicNum::from_integer(p, place, D);
      s.images = complete<PadicNum>(z, one, {x, -(pp * y), y, -x}, {z, pp, one, z});
      s.x = x;
      s.y = y;
      break;
    }
    case SplitCase::UnramSquare: {
      PadicNum omega = hensel_sqrt(PadicNum::from_integer(p, place, D + 1), D);
      if (options.flip_root_sign) omega = -omega;
      PadicNum z = PadicNum::zero(place, D), one = PadicNum::from_integer(1, place, D);
      PadicNum ndn = PadicNum::from_integer(-dn, place, D);
      s.images = complete<PadicNum>(z, one, {z, one, ndn, z}, {-omega, z, z, omega});
      s.omega = omega;
      break;
    }
    case SplitCase::AtP: {
      // root = -a^{-1} mod p, so a*root = -1 and a*delta*N = root mod p.
      Integer ainv;
      Integer a(static_cast<long>(params.a()));
      if (mpz_invert(ainv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        fail(ErrorCode::InvalidParameters, "a is not invertible mod p");
      PadicNum root =
          hensel_sqrt_from(PadicNum::from_integer(-dn, place, D + 1), floor_mod(-ainv, p), D);
      if (options.flip_root_sign) root = -root;
      PadicNum z = PadicNum::zero(place, D), one = PadicNum::from_integer(1, place, D);
      PadicNum pp = PadicNum::from_integer(p, place, D);
      s.images = complete<PadicNum>(z, one, {-root, z, z, root}, {z, one, pp, z});
      s.root = root;
      break;
    }
    case SplitCase::Ramified: {
      NormSolution ns = solve_norm_equation(p, make_rational(-dn, place), place, D + 1);
      PadicNum z = PadicNum::zero(place, D), one = PadicNum::from_integer(1, place, D);
      PadicNum qq = PadicNum::from_integer(place, place, D);
      PadicQuad X(ns.x, ns.y, p), Z(z, z, p), One(one, z, p), r(z, one, p);
      PadicQuad qX(qq * ns.x, qq * ns.y, p);
      s.images = complete<PadicQuad>(Z, One, {Z, X.conj(), qX, Z}, {-r, Z, Z, r});
      s.x = ns.x;
      s.y = ns.y;
      break;
    }
  }
  return s;
}

MatrixImage embed_element(const LocalSplitting& s, const QuatElem& u) {
  if (!(u.algebra() == s.params.algebra()))
    fail(ErrorCode::AmbientMismatch, "element from another algebra");
  LiftCtx c = ctx_of(s);
  return std::visit([&](const auto& g) -> MatrixImage { return embed_with(g, u, c); }, s.images);
}

Integer entry_residue(const LocalSplitting& s, const QuatElem& u, int row, int col, long m) {
  if (s.place == 0) fail(ErrorCode::Unsupported, "no residues at the real place");
  MatrixImage img = embed_element(s, u);
  auto pick = [&](const auto& mat) -> const auto& {
    return row == 0 ? (col == 0 ? mat.a : mat.b) : (col == 0 ? mat.c : mat.d);
  };
  return std::visit(
      overloaded{
          [&](const Mat2<Rational>& mat) { return residue_of(pick(mat), s.place, m); },
          [&](const Mat2<PadicNum>& mat) { return pick(mat).residue(m); },
          [&](const auto&) -> Integer {
            fail(ErrorCode::Unsupported,
                 std::string("entry residues are not defined for the ") + split_case_name(s.kind) +
                     " case");
          }},
      img);
}

bool in_local_order(const LocalSplitting& s, const MatrixImage& m) {
  const long v = s.level_valuation();
  return std::visit(
      overloaded{
          [&](const Mat2<Rational>& x) {
            const Rational N(s.params.level());
            return is_integer(x.a) && is_integer(x.b) && is_integer(x.d) && is_integer(x.c / N);
          },
          [&](const Mat2<PadicNum>& x) {
            return x.a.is_integral() && x.b.is_integral() && x.d.is_integral() &&
                   x.c.is_integral() && x.c.divisible_by_power(v);
          },
          [&](const Mat2<PadicQuad>& x) {
            PadicNum qq = PadicNum::from_integer(s.place, s.place, s.digits);
            PadicQuad qb(qq * x.b.conj().a(), qq * x.b.conj().b(), x.b.radicand());
            return x.a.is_integral() && x.b.is_integral() && same(x.d, x.a.conj(), s.precision) &&
                   same(x.c, qb, s.precision);
          },
          [&](const Mat2<QuadRat>&) { return true; }},
      m);
}

Report verify_splitting(const LocalSplitting& s, const ZLattice4& order) {
  Report rep;
  const std::string pre = std::string("split.") + split_case_name(s.kind) + ".";
  const std::string wit = s.describe();
  const LiftCtx c = ctx_of(s);
  const Rational ndn(-s.params.delta_level());
  const Rational p(s.params.p());
  const long lvl = s.precision;
  auto basis = order.basis();

  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g.one.a)>;
        rep.add(pre + "i_squared", "phi(i)^2 = -delta*N", same(g.i * g.i, lift<T>(ndn, c) * g.one, lvl),
                wit);
        rep.add(pre + "j_squared", "phi(j)^2 = p", same(g.j * g.j, lift<T>(p, c) * g.one, lvl), wit);
        Mat2<T> zero = lift<T>(0, c) * g.one;
        rep.add(pre + "anticommute", "phi(i)phi(j) + phi(j)phi(i) = 0",
                same(g.i * g.j + g.j * g.i, zero, lvl), wit);

        std::vector<Mat2<T>> img;
        for (const auto& e : basis) img.push_back(embed_with(g, e, c));
        bool hom = true;
        for (std::size_t h = 0; h < basis.size(); ++h)
          for (std::size_t k = 0; k < basis.size(); ++k)
            hom = hom && same(embed_with(g, basis[h] * basis[k], c), img[h] * img[k], lvl);
        rep.add(pre + "multiplicative", "phi(e_h e_k) = phi(e_h) phi(e_k) on the order basis", hom,
                wit);

        bool shape = true;
        std::string bad;
        for (std::size_t h = 0; h < img.size(); ++h)
          if (!in_local_order(s, MatrixImage(img[h]))) {
            shape = false;
            bad = " (fails at " + format_quat(basis[h]) + ")";
            break;
          }
        rep.add(pre + "integrality", "phi maps the order basis into the local order shape", shape,
                wit + bad);

        if (basis.size() == 4) {
          std::array<std::array<T, 4>, 4> gram;
          std::array<std::array<Rational, 4>, 4> exact;
          std::vector<std::vector<Rational>> ex(4, std::vector<Rational>(4));
          for (int h = 0; h < 4; ++h)
            for (int k = 0; k < 4; ++k) {
              gram[h][k] = (img[h] * img[k]).trace();
              ex[h][k] = (basis[h] * basis[k]).reduced_trace();
              exact[h][k] = ex[h][k];
            }
          Rational gd = rational_det(ex);
          bool traces = true;
          for (int h = 0; h < 4; ++h)
            for (int k = 0; k < 4; ++k) traces = traces && same(gram[h][k], lift<T>(exact[h][k], c), lvl);
          rep.add(pre + "trace_form", "tr(phi(u)phi(v)) = trd(uv) on the order basis", traces, wit);
          const Rational dn(s.params.delta_level());
          rep.add(pre + "discriminant", "image reduced discriminant is delta*N",
                  abs(gd) == dn * dn && same(det4(gram), lift<T>(gd, c), lvl),
                  wit + ", Gram det " + to_string(gd));
        }
      },
      s.images);

  if (s.kind == SplitCase::AtP && s.root) {
    Integer pz(static_cast<long>(s.params.p()));
    Integer adn = s.params.delta_level() * static_cast<long>(s.params.a());
    PadicNum diff = PadicNum::from_integer(adn, s.place, s.digits) - *s.root;
    bool ok = diff.divisible_by_power(1);
    rep.add(pre + "cN", "a*delta*N - root = 0 mod p", ok,
            wit + ", root mod p = " + s.root->residue(1).get_str());
  }
  if (s.kind == SplitCase::Rational && basis.size() == 4) {
    // The image of the order is exactly the level-N congruence ring.
    std::vector<std::vector<Rational>> m;
    const Rational N(s.params.level());
    for (const auto& e : basis) {
      auto x = std::get<Mat2<Rational>>(embed_element(s, e));
      m.push_back({x.a, x.b, x.c / N, x.d});
    }
    Rational d = abs(rational_det(m));
    rep.add(pre + "image_lattice", "phi(order) is the full level-N congruence ring", d == 1,
            wit + ", index " + to_string(d));
  }
  return rep;
}

GeneratorImages<QuadRat> symbolic_images(const LocalSplitting& s) {
  const Integer dn = s.params.delta_level();
  const Rational p(s.params.p());
  QuadRat z(0, 0, 0), one(1, 0, 0);
  auto R = [](const Rational& r) { return QuadRat(r, 0, 0); };
  switch (s.kind) {
    case SplitCase::Rational: {
      const auto& g = std::get<GeneratorImages<Rational>>(s.images);
      auto conv = [&](const Mat2<Rational>& m) { return Mat2<QuadRat>{R(m.a), R(m.b), R(m.c), R(m.d)}; };
      return {conv(g.one), conv(g.i), conv(g.j), conv(g.k)};
    }
    case SplitCase::UnramNonsquare: {
      if (!s.y || !s.y->is_zero())
        fail(ErrorCode::Unsupported, "symbolic images need the y = 0 norm solution");
      QuadRat x = QuadRat::sqrt_of(-dn);
      return complete<QuadRat>(z, one, {x, z, z, -x}, {z, R(p), one, z});
    }
    case SplitCase::UnramSquare: {
      QuadRat w = QuadRat::sqrt_of(Integer(static_cast<long>(s.params.p())));
      return complete<QuadRat>(z, one, {z, one, R(Rational(-dn)), z}, {-w, z, z, w});
    }
    case SplitCase::AtP: {
      QuadRat r = QuadRat::sqrt_of(-dn);
      return complete<QuadRat>(z, one, {-r, z, z, r}, {z, one, R(p), z});
    }
    default:
      fail(ErrorCode::Unsupported,
           std::string("no symbolic images for the ") + split_case_name(s.kind) + " case");
  }
}

Mat2<QuadRat> embed_symbolic(const GeneratorImages<QuadRat>& g, const QuatElem& u) {
  return embed_with(g, u, LiftCtx{0, 0, 0});
}

}  // namespace quatorder
