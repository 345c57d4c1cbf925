#pragma once

#include <array>
#include <span>
#include <vector>

#include "quatorder/hnf.hpp"
#include "quatorder/quat_elem.hpp"

namespace quatorder {

/// A Z-lattice of rank <= 4 inside a quaternion algebra, kept canonical as
/// (HNF of the coefficient rows scaled by `denominator`) / denominator with
/// the denominator as small as possible.
class ZLattice4 {
 public:
  ZLattice4() = default;
  ZLattice4(const Algebra& alg, std::span<const QuatElem> generators);

  const Algebra& algebra() const { return alg_; }
  const Integer& denominator() const { return den_; }
  const IntMatrix& hnf_rows() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }

  std::vector<QuatElem> basis() const;
  bool contains(const QuatElem& u) const;
  bool contains(const ZLattice4& other) const;

  /// [this : sub] for full-rank lattices with sub contained in this.
  Rational index_of(const ZLattice4& sub) const;

  /// Closed under multiplication (all products of basis pairs lie inside).
  bool is_multiplicatively_closed() const;

  friend bool operator==(const ZLattice4& a, const ZLattice4& b) {
    return a.alg_ == b.alg_ && a.den_ == b.den_ && a.rows_ == b.rows_;
  }

 private:
  Algebra alg_{};
  Integer den_{1};
  IntMatrix rows_;
};

ZLattice4 lattice_intersect(const ZLattice4& a, const ZLattice4& b);

/// Coordinates of u in a Q-basis of four quaternions.
std::array<Rational, 4> coordinates_in(std::span<const QuatElem> basis, const QuatElem& u);

/// sqrt(|det(trd(b_h * b_k))|). Throws NotAnOrderBasis when |det| is not
/// the square of an integer.
Integer reduced_discriminant(std::span<const QuatElem> basis);

/// Determinant of a square rational matrix (Gaussian elimination).
Rational rational_det(std::vector<std::vector<Rational>> m);

}  // namespace quatorder
