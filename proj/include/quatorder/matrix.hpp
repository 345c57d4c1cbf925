#pragma once

#include "quatorder/error.hpp"
#include "quatorder/rational.hpp"

namespace quatorder {

/// a + b*sqrt(d) in Q(sqrt d), d a fixed nonsquare integer.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  static QuadRat sqrt_of(const Integer& d) { return {0, 1, d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return d_; }

  QuadRat conj() const { return {a_, -b_, d_}; }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadRat operator-() const { return {-a_, -b_, d_}; }
  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.common(y)};
  }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return x + (-y); }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    Integer d = x.common(y);
    return {x.a_ * y.a_ + Rational(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d};
  }
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    Rational n = y.norm();
    if (n == 0) fail(ErrorCode::InvalidParameters, "division by zero in Q(sqrt d)");
    QuadRat r = x * y.conj();
    return {r.a_ / n, r.b_ / n, r.d_};
  }
  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  // Pure rationals (b == 0) may carry radicand 0 and adopt the other operand's.
  Integer common(const QuadRat& y) const {
    if (d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == d_) return d_;
    fail(ErrorCode::AmbientMismatch, "quadratic numbers over different fields");
  }

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

/// 2x2 matrix ((a, b), (c, d)) over a commutative ring T.
template <class T>
struct Mat2 {
  T a, b, c, d;

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const T& s, const Mat2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
};

}  // namespace quatorder
