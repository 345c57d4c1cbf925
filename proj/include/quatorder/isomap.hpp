#pragma once

#include <cstdint>
#include <optional>

#include "quatorder/quat.hpp"
#include "quatorder/report.hpp"

namespace quatorder {

inline constexpr long kDefaultConicBound = 400;

struct ConicSolution {
  Rational beta;
  Rational delta;
};

/// First (beta, delta) = (v/w, u/w) with M*beta^2 - p*M*delta^2 = N, scanning
/// w = 1.. bound and then u = 0.. bound (v > 0 is then forced).
ConicSolution solve_conic(const Integer& M, const Integer& p, const Integer& N,
                          long bound = kDefaultConicBound);

/// M*beta^2 - p*M*delta^2 - N.
Rational conic_residual(const Integer& M, const Integer& p, const Integer& N,
                        const ConicSolution& s);

/// Psi: B(N,p) -> B(M,p), i -> beta*i + delta*k, j -> j.
struct PsiMap {
  AlgebraParams source = AlgebraParams::with_prime(1, 1, 1);
  AlgebraParams target = AlgebraParams::with_prime(1, 1, 1);
  Rational beta, delta;
  bool sign_flipped = false;
  std::optional<Integer> S;  // N/M when M | N
};

/// Target params use the source p with level `target_level`.
PsiMap build_psi(const AlgebraParams& source, std::int64_t target_level,
                 long bound = kDefaultConicBound);

QuatElem apply_psi(const PsiMap& m, const QuatElem& u);

/// Coordinates of Psi(e3), Psi(e4) in the target Hashimoto basis as given
/// by the closed formulas (valid for M | N).
struct PsiCoefficients {
  Rational A3, B3, C3, D3;
  Rational A4, B4, C4, D4;
};
PsiCoefficients psi_coefficients(const PsiMap& m);

/// Generator relations and the conic residual.
Report verify_psi(const PsiMap& m);

/// Psi(R(N)) inside R(M); throws NotDivisible unless M | N.
Report verify_psi_inclusion(const PsiMap& m);

}  // namespace quatorder
