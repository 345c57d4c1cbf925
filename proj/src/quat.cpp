#include "quatorder/quat.hpp"

#include <numeric>
#include <string>

namespace quatorder {

AlgebraParams AlgebraParams::hashimoto(std::int64_t delta, std::int64_t level,
                                       std::int64_t prime_search_bound) {
  std::int64_t p = find_hashimoto_prime(delta, level, prime_search_bound);
  return with_prime(delta, level, p);
}

AlgebraParams AlgebraParams::with_prime(std::int64_t delta, std::int64_t level, std::int64_t p) {
  if (!is_indefinite_discriminant(delta))
    fail(ErrorCode::InvalidParameters,
         "discriminant " + std::to_string(delta) +
             " must be squarefree with an even number of prime factors");
  if (level < 1 || std::gcd(delta, level) != 1)
    fail(ErrorCode::InvalidParameters,
         "level " + std::to_string(level) + " must be positive and coprime to the discriminant");
  if (delta == 1) {
    if (p != 1) fail(ErrorCode::InvalidParameters, "discriminant 1 uses p = 1");
    return AlgebraParams(1, level, 1, 0);
  }
  if (!satisfies_hashimoto_conditions(delta, level, p))
    fail(ErrorCode::InvalidParameters, "p = " + std::to_string(p) +
                                           " violates the prime conditions for discriminant " +
                                           std::to_string(delta) + ", level " +
                                           std::to_string(level));
  return AlgebraParams(delta, level, p, find_a(delta, level, p));
}

std::array<QuatElem, 4> hashimoto_basis(const AlgebraParams& params) {
  const Algebra alg = params.algebra();
  const Rational half(1, 2);
  QuatElem e1 = QuatElem::one(alg);
  QuatElem e2(alg, half, 0, half, 0);
  QuatElem e3(alg, 0, half, 0, half);
  QuatElem e4;
  if (params.is_split_case()) {
    e4 = QuatElem(alg, 0, 0, Rational(params.level()), 1);
  } else {
    Rational p(params.p());
    Rational adn = Rational(params.delta_level() * static_cast<long>(params.a()));
    e4 = QuatElem(alg, 0, 0, adn / p, 1 / p);
  }
  return {e1, e2, e3, e4};
}

ZLattice4 hashimoto_order(const AlgebraParams& params) {
  auto b = hashimoto_basis(params);
  return ZLattice4(params.algebra(), b);
}

bool phi_membership(const QuatElem& u, const ZLattice4& order) {
  return u.reduced_norm() == 1 && order.contains(u);
}

QuatElem combine(std::span<const QuatElem> basis, std::span<const Integer> coeffs) {
  if (basis.empty() || basis.size() != coeffs.size())
    fail(ErrorCode::InvalidParameters, "coefficient count does not match the basis");
  QuatElem out = QuatElem::scalar(basis[0].algebra(), 0);
  for (std::size_t h = 0; h < basis.size(); ++h) out = out + Rational(coeffs[h]) * basis[h];
  return out;
}

}  // namespace quatorder
