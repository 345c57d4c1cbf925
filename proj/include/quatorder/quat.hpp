#pragma once

#include <array>
#include <cstdint>

#include "quatorder/lattice.hpp"
#include "quatorder/numth.hpp"
#include "quatorder/quat_elem.hpp"

namespace quatorder {

/// (delta, level, p, a) describing B(level, p) = {-delta*level, p} and its
/// Hashimoto order. Only constructible through the validating factories.
class AlgebraParams {
 public:
  /// Finds the smallest admissible p and then a.
  static AlgebraParams hashimoto(std::int64_t delta, std::int64_t level,
                                 std::int64_t prime_search_bound = 100000);
  /// Uses the given p (which must satisfy every condition for this level).
  static AlgebraParams with_prime(std::int64_t delta, std::int64_t level, std::int64_t p);

  std::int64_t delta() const { return delta_; }
  std::int64_t level() const { return level_; }
  std::int64_t p() const { return p_; }
  std::int64_t a() const { return a_; }

  Integer delta_level() const { return Integer(static_cast<long>(delta_)) * static_cast<long>(level_); }
  Algebra algebra() const { return {-delta_level(), Integer(static_cast<long>(p_))}; }
  bool is_split_case() const { return delta_ == 1; }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  AlgebraParams(std::int64_t delta, std::int64_t level, std::int64_t p, std::int64_t a)
      : delta_(delta), level_(level), p_(p), a_(a) {}

  std::int64_t delta_ = 1;
  std::int64_t level_ = 1;
  std::int64_t p_ = 1;
  std::int64_t a_ = 0;
};

/// e1 = 1, e2 = (1+j)/2, e3 = (i+k)/2, e4 = (a*delta*N*j + k)/p; for
/// delta = 1 the fourth element is N*j + k.
std::array<QuatElem, 4> hashimoto_basis(const AlgebraParams& params);

/// The Eichler order R(N) spanned by the Hashimoto basis.
ZLattice4 hashimoto_order(const AlgebraParams& params);

/// u lies in the order and has reduced norm 1.
bool phi_membership(const QuatElem& u, const ZLattice4& order);

/// Sum of c_h * basis[h].
QuatElem combine(std::span<const QuatElem> basis, std::span<const Integer> coeffs);

}  // namespace quatorder
