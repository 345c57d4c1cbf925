#include "quatorder/rational.hpp"

#include "quatorder/error.hpp"

namespace quatorder {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotAPrime: return "NotAPrime";
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::NotANorm: return "NotANorm";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotAnOrderBasis: return "NotAnOrderBasis";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::RamifiedPlace: return "RamifiedPlace";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "not a rational: '" + s + "'");
  }
}

long valuation(Integer n, const Integer& q) {
  if (n == 0) fail(ErrorCode::InvalidParameters, "valuation of zero");
  if (abs(q) < 2) fail(ErrorCode::InvalidParameters, "valuation needs a base of at least 2");
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const Rational& r, const Integer& q) {
  return valuation(Integer(r.get_num()), q) - valuation(Integer(r.get_den()), q);
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (root) *root = s;
  return s * s == n;
}

bool is_rational_square(const Rational& r, Rational* root) {
  Integer a, b;
  if (!is_perfect_square(r.get_num(), &a) || !is_perfect_square(r.get_den(), &b)) return false;
  if (root) *root = make_rational(a, b);
  return true;
}

}  // namespace quatorder
