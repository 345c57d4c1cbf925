#include "quatorder/quat_elem.hpp"

namespace quatorder {

namespace {

void check_same(const QuatElem& u, const QuatElem& v) {
  if (!(u.algebra() == v.algebra()))
    fail(ErrorCode::AmbientMismatch, "quaternions from different algebras");
}

}  // namespace

QuatElem QuatElem::conj() const { return {alg_, c_[0], -c_[1], -c_[2], -c_[3]}; }

Rational QuatElem::reduced_norm() const {
  const Rational a(alg_.i_sq);
  const Rational b(alg_.j_sq);
  return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
}

bool QuatElem::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

QuatElem operator+(const QuatElem& u, const QuatElem& v) {
  check_same(u, v);
  return {u.alg_, u.c_[0] + v.c_[0], u.c_[1] + v.c_[1], u.c_[2] + v.c_[2], u.c_[3] + v.c_[3]};
}

QuatElem operator-(const QuatElem& u, const QuatElem& v) {
  check_same(u, v);
  return {u.alg_, u.c_[0] - v.c_[0], u.c_[1] - v.c_[1], u.c_[2] - v.c_[2], u.c_[3] - v.c_[3]};
}

QuatElem operator*(const QuatElem& u, const QuatElem& v) {
  check_same(u, v);
  const Rational a(u.alg_.i_sq);
  const Rational b(u.alg_.j_sq);
  const auto& [x1, y1, z1, t1] = u.c_;
  const auto& [x2, y2, z2, t2] = v.c_;
  return {u.alg_,
          x1 * x2 + a * y1 * y2 + b * z1 * z2 - a * b * t1 * t2,
          x1 * y2 + y1 * x2 - b * z1 * t2 + b * t1 * z2,
          x1 * z2 + z1 * x2 + a * y1 * t2 - a * t1 * y2,
          x1 * t2 + t1 * x2 + y1 * z2 - z1 * y2};
}

QuatElem operator*(const Rational& s, const QuatElem& u) {
  return {u.alg_, s * u.c_[0], s * u.c_[1], s * u.c_[2], s * u.c_[3]};
}

std::string format_quat(const QuatElem& u) {
  Integer den = 1;
  for (const auto& c : u.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  static const char* units[] = {"", "i", "j", "k"};
  std::string body;
  int terms = 0;
  for (int n = 0; n < 4; ++n) {
    Integer c = u.coeffs()[n].get_num() * (den / u.coeffs()[n].get_den());
    if (c == 0) continue;
    std::string mag = Integer(abs(c)).get_str();
    if (c < 0)
      body += "-";
    else if (terms > 0)
      body += "+";
    if (n == 0 || mag != "1") body += mag;
    body += units[n];
    ++terms;
  }
  if (terms == 0) return "0";
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

QuatElem parse_quat(const std::string& text, const Algebra& alg) {
  auto bad = [&text]() -> QuatElem { fail(ErrorCode::ParseError, "cannot read quaternion '" + text + "'"); };
  std::string_view body = text;
  Integer den = 1;
  if (!body.empty() && body.front() == '(') {
    auto close = body.rfind(")/");
    if (close == std::string_view::npos) return bad();
    try {
      den = Integer(std::string(body.substr(close + 2)));
    } catch (const std::invalid_argument&) {
      return bad();
    }
    if (den <= 0) return bad();
    body = body.substr(1, close - 1);
  }
  if (body.empty()) return bad();
  std::array<Integer, 4> c{};
  std::array<bool, 4> seen{};
  std::size_t pos = 0;
  while (pos < body.size()) {
    int sign = 1;
    if (body[pos] == '+' || body[pos] == '-') {
      sign = body[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      return bad();
    }
    std::size_t start = pos;
    while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') ++pos;
    Integer mag = start == pos ? Integer(1) : Integer(std::string(body.substr(start, pos - start)));
    int slot = 0;
    if (pos < body.size() && (body[pos] == 'i' || body[pos] == 'j' || body[pos] == 'k')) {
      slot = body[pos] == 'i' ? 1 : body[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (start == pos) {
      return bad();
    }
    if (seen[slot]) return bad();
    seen[slot] = true;
    c[slot] = sign * mag;
  }
  return QuatElem(alg, make_rational(c[0], den), make_rational(c[1], den), make_rational(c[2], den),
                  make_rational(c[3], den));
}

}  // namespace quatorder
