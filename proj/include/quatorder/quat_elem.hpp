#pragma once

#include <array>
#include <string>
#include <string_view>

#include "quatorder/error.hpp"
#include "quatorder/rational.hpp"

namespace quatorder {

/// Structure constants of the quaternion algebra {i_sq, j_sq} over Q:
/// i^2 = i_sq, j^2 = j_sq, k = ij = -ji.
struct Algebra {
  Integer i_sq;
  Integer j_sq;

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// x + y i + z j + t k with rational coefficients.
class QuatElem {
 public:
  QuatElem() = default;
  QuatElem(Algebra alg, Rational x, Rational y, Rational z, Rational t)
      : alg_(std::move(alg)), c_{std::move(x), std::move(y), std::move(z), std::move(t)} {}

  static QuatElem scalar(const Algebra& alg, const Rational& x) { return {alg, x, 0, 0, 0}; }
  static QuatElem one(const Algebra& alg) { return scalar(alg, 1); }
  static QuatElem i(const Algebra& alg) { return {alg, 0, 1, 0, 0}; }
  static QuatElem j(const Algebra& alg) { return {alg, 0, 0, 1, 0}; }
  static QuatElem k(const Algebra& alg) { return {alg, 0, 0, 0, 1}; }

  const Algebra& algebra() const { return alg_; }
  const std::array<Rational, 4>& coeffs() const { return c_; }
  const Rational& x() const { return c_[0]; }
  const Rational& y() const { return c_[1]; }
  const Rational& z() const { return c_[2]; }
  const Rational& t() const { return c_[3]; }

  QuatElem conj() const;
  Rational reduced_norm() const;
  Rational reduced_trace() const { return 2 * c_[0]; }
  bool is_zero() const;

  friend QuatElem operator+(const QuatElem& u, const QuatElem& v);
  friend QuatElem operator-(const QuatElem& u, const QuatElem& v);
  friend QuatElem operator*(const QuatElem& u, const QuatElem& v);
  friend QuatElem operator*(const Rational& s, const QuatElem& u);
  QuatElem operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const QuatElem& u, const QuatElem& v) {
    return u.alg_ == v.alg_ && u.c_ == v.c_;
  }

 private:
  Algebra alg_{Integer(-1), Integer(1)};
  std::array<Rational, 4> c_{};
};

/// Writes the element over a common denominator, e.g. "(525j+k)/13".
std::string format_quat(const QuatElem& u);

/// Inverse of format_quat. Throws ParseError.
QuatElem parse_quat(const std::string& text, const Algebra& alg);

}  // namespace quatorder
