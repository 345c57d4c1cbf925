#include "quatorder/lattice.hpp"

#include <utility>

namespace quatorder {

namespace {

Integer common_denominator(std::span<const QuatElem> gens) {
  Integer den = 1;
  for (const auto& g : gens)
    for (const auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  return den;
}

std::vector<Integer> scaled_row(const QuatElem& u, const Integer& den) {
  std::vector<Integer> row(4);
  for (int n = 0; n < 4; ++n) {
    Rational s = u.coeffs()[n] * den;
    if (!is_integer(s)) fail(ErrorCode::InvalidParameters, "element not on the lattice grid");
    row[n] = s.get_num();
  }
  return row;
}

}  // namespace

ZLattice4::ZLattice4(const Algebra& alg, std::span<const QuatElem> generators) : alg_(alg) {
  for (const auto& g : generators)
    if (!(g.algebra() == alg)) fail(ErrorCode::AmbientMismatch, "generator from another algebra");
  Integer den = common_denominator(generators);
  IntMatrix rows;
  for (const auto& g : generators) rows.push_back(scaled_row(g, den));
  rows_ = hnf(rows, 4);
  // Cancel any factor shared by the denominator and every entry.
  Integer g = den;
  for (const auto& r : rows_)
    for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  den_ = den / g;
  for (auto& r : rows_)
    for (auto& x : r) x /= g;
}

std::vector<QuatElem> ZLattice4::basis() const {
  std::vector<QuatElem> out;
  for (const auto& r : rows_)
    out.emplace_back(alg_, make_rational(r[0], den_), make_rational(r[1], den_),
                     make_rational(r[2], den_), make_rational(r[3], den_));
  return out;
}

bool ZLattice4::contains(const QuatElem& u) const {
  if (!(u.algebra() == alg_)) fail(ErrorCode::AmbientMismatch, "element from another algebra");
  std::vector<Integer> v(4);
  for (int n = 0; n < 4; ++n) {
    Rational s = u.coeffs()[n] * den_;
    if (!is_integer(s)) return false;
    v[n] = s.get_num();
  }
  return hnf_contains(rows_, v);
}

bool ZLattice4::contains(const ZLattice4& other) const {
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

Rational ZLattice4::index_of(const ZLattice4& sub) const {
  if (!(sub.alg_ == alg_)) fail(ErrorCode::AmbientMismatch, "lattices in different algebras");
  if (rank() != 4 || sub.rank() != 4)
    fail(ErrorCode::InvalidParameters, "index needs full-rank lattices");
  // covolume = det(rows) / den^4
  Rational mine = make_rational(hnf_determinant(rows_), ipow(den_, 4));
  Rational theirs = make_rational(hnf_determinant(sub.rows_), ipow(sub.den_, 4));
  return theirs / mine;
}

bool ZLattice4::is_multiplicatively_closed() const {
  auto b = basis();
  for (const auto& x : b)
    for (const auto& y : b)
      if (!contains(x * y)) return false;
  return true;
}

ZLattice4 lattice_intersect(const ZLattice4& a, const ZLattice4& b) {
  if (!(a.algebra() == b.algebra()))
    fail(ErrorCode::AmbientMismatch, "intersection of lattices in different algebras");
  Integer den;
  mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  auto rescale = [&den](const ZLattice4& l) {
    IntMatrix m = l.hnf_rows();
    Integer f = den / l.denominator();
    for (auto& r : m)
      for (auto& x : r) x *= f;
    return m;
  };
  IntMatrix rows = intersect_rows(rescale(a), rescale(b), 4);
  std::vector<QuatElem> gens;
  for (const auto& r : rows)
    gens.emplace_back(a.algebra(), make_rational(r[0], den), make_rational(r[1], den),
                      make_rational(r[2], den), make_rational(r[3], den));
  return ZLattice4(a.algebra(), gens);
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::array<Rational, 4> coordinates_in(std::span<const QuatElem> basis, const QuatElem& u) {
  if (basis.size() != 4) fail(ErrorCode::InvalidParameters, "coordinates need four basis elements");
  // Solve sum_h c_h * basis[h] = u by Gauss-Jordan on the 4x5 system.
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(5));
  for (int r = 0; r < 4; ++r) {
    for (int h = 0; h < 4; ++h) m[r][h] = basis[h].coeffs()[r];
    m[r][4] = u.coeffs()[r];
  }
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && m[p][c] == 0) ++p;
    if (p == 4) fail(ErrorCode::NotAnOrderBasis, "basis is linearly dependent");
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (int k = c; k < 5; ++k) m[c][k] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

Integer reduced_discriminant(std::span<const QuatElem> basis) {
  if (basis.size() != 4) fail(ErrorCode::NotAnOrderBasis, "a basis has four elements");
  std::vector<std::vector<Rational>> gram(4, std::vector<Rational>(4));
  for (int h = 0; h < 4; ++h)
    for (int k = 0; k < 4; ++k) gram[h][k] = (basis[h] * basis[k]).reduced_trace();
  Rational det = abs(rational_det(gram));
  Rational root;
  if (!is_integer(det) || !is_rational_square(det, &root))
    fail(ErrorCode::NotAnOrderBasis, "Gram determinant " + to_string(det) + " is not a square");
  return root.get_num();
}

}  // namespace quatorder
