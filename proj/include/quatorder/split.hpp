#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "quatorder/matrix.hpp"
#include "quatorder/numth.hpp"
#include "quatorder/quat.hpp"
#include "quatorder/report.hpp"

namespace quatorder {

/// a + b*sqrt(p) in the unramified quadratic extension Q_q(sqrt p), p a
/// nonsquare unit at q.
class PadicQuad {
 public:
  PadicQuad() = default;
  PadicQuad(PadicNum a, PadicNum b, Integer p) : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)) {}

  const PadicNum& a() const { return a_; }
  const PadicNum& b() const { return b_; }
  const Integer& radicand() const { return p_; }

  PadicQuad conj() const { return {a_, -b_, p_}; }
  PadicNum norm() const;
  /// In the ring of integers: both coordinates integral for odd q; for
  /// q = 2 (p = 1 mod 4) the integers are Z_2[(1+sqrt p)/2].
  bool is_integral() const;

  PadicQuad operator-() const { return {-a_, -b_, p_}; }
  friend PadicQuad operator+(const PadicQuad& x, const PadicQuad& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.p_};
  }
  friend PadicQuad operator-(const PadicQuad& x, const PadicQuad& y) { return x + (-y); }
  friend PadicQuad operator*(const PadicQuad& x, const PadicQuad& y);

 private:
  PadicNum a_, b_;
  Integer p_{1};
};

enum class SplitCase { Rational, UnramNonsquare, UnramSquare, AtP, Ramified, Archimedean };

const char* split_case_name(SplitCase c);

/// Images of 1, i, j, k.
template <class T>
struct GeneratorImages {
  Mat2<T> one, i, j, k;
};

using ImageSet = std::variant<GeneratorImages<Rational>, GeneratorImages<PadicNum>,
                              GeneratorImages<PadicQuad>, GeneratorImages<QuadRat>>;
using MatrixImage = std::variant<Mat2<Rational>, Mat2<PadicNum>, Mat2<PadicQuad>, Mat2<QuadRat>>;

struct SplitOptions {
  /// Fail with CaseMismatch unless the place dispatches to this case.
  std::optional<SplitCase> expect;
  /// Test hook: take the other square root at p (breaks the normalization).
  bool flip_root_sign = false;
  /// Nonsquare case: when -delta*N is a square mod q use (x, y) = (sqrt(-delta*N), 0).
  bool diagonal_norm_solution = false;
};

/// Extra digits carried beyond the asserted precision.
inline constexpr long kGuardDigits = 4;

/// One explicit local isomorphism. Immutable after construction.
struct LocalSplitting {
  SplitCase kind = SplitCase::Rational;
  Integer place;  // 0 for the real place
  AlgebraParams params = AlgebraParams::with_prime(1, 1, 1);
  long precision = kDefaultPrecision;  // congruences are asserted mod q^precision
  long digits = kDefaultPrecision + kGuardDigits;
  std::optional<PadicNum> x, y;   // nonsquare and ramified cases
  std::optional<PadicNum> omega;  // square case: omega^2 = p
  std::optional<PadicNum> root;   // at p: root^2 = -delta*N, a*root = -1 mod p
  ImageSet images;

  /// v_q(N) at finite places (0 elsewhere).
  long level_valuation() const;
  std::string describe() const;
};

/// Which case a place falls into; Unsupported for q = 2 with p = 5 mod 8
/// and 2 not dividing delta.
SplitCase classify_place(const AlgebraParams& params, const Integer& place);

LocalSplitting build_splitting(const AlgebraParams& params, const Integer& place,
                               long precision = kDefaultPrecision, SplitOptions options = {});

MatrixImage embed_element(const LocalSplitting& s, const QuatElem& u);

/// Entry (row, col) of embed(u) reduced mod q^m, for splittings whose
/// entries are rational or q-adic. Throws for non-integral entries.
Integer entry_residue(const LocalSplitting& s, const QuatElem& u, int row, int col, long m);

/// Whether embed(u) lies in the declared local order shape.
bool in_local_order(const LocalSplitting& s, const MatrixImage& m);

Report verify_splitting(const LocalSplitting& s, const ZLattice4& order);

/// The same images with the local root replaced by the formal symbol
/// sqrt(d) in Q(sqrt d); only for the unramified cases whose images depend
/// on a single square root (nonsquare with y = 0, square, at p).
GeneratorImages<QuadRat> symbolic_images(const LocalSplitting& s);

/// Embedding through symbolic images.
Mat2<QuadRat> embed_symbolic(const GeneratorImages<QuadRat>& g, const QuatElem& u);

}  // namespace quatorder
