#pragma once

#include <cstdint>
#include <vector>

#include "quatorder/chains.hpp"
#include "quatorder/isomap.hpp"
#include "quatorder/report.hpp"

namespace quatorder {

struct SweepConfig {
  std::vector<std::int64_t> deltas{1, 6, 10, 14, 15, 21, 22, 26, 34, 35};
  std::vector<std::int64_t> levels{1, 2, 3, 5, 7, 9, 11};
  std::vector<std::int64_t> places{2, 3, 5, 7, 11, 13};
  bool include_p = true;    // also the Hashimoto prime of each algebra
  bool include_inf = true;  // and the real place
  long precision = kDefaultPrecision;
  std::vector<long> chain_depths{8, 10, 12};
  std::int64_t prime_bound = 100000;
  long conic_bound = kDefaultConicBound;
  std::int64_t aux_bound = kDefaultAuxiliaryBound;
  bool flip_root_sign = false;  // mutation hook for the at-p splitting
  std::uint64_t seed = 0;
  int hilbert_samples = 200;
  int psi_samples = 100;  // random elements per Psi pair
  bool substrate = true;  // number-theory property checks (skipped for an empty sweep)
  unsigned threads = 0;         // 0: one task per discriminant
};

struct SweepResult {
  Report report;  // sorted by id
  std::size_t tuples = 0;
  std::size_t skipped = 0;  // ramified or unsupported tuples
  bool vacuous() const { return report.checks.empty(); }
};

/// Hashimoto conditions, prime minimality, discriminant, closure and the
/// ramification of {-delta*N, p}.
Report verify_construct(const AlgebraParams& params, std::int64_t prime_bound = 100000);

/// Legendre against enumeration for q < 100, sqrt_mod, the Hilbert product
/// formula on random pairs, Hensel roots at precision 24 and the Hashimoto
/// prime for (35, 3).
Report verify_substrate(std::uint64_t seed, int hilbert_samples = 200);

/// n(Psi(u)) = n(u) and tr(Psi(u)) = tr(u) on random u in R(N).
Report verify_psi_norms(const PsiMap& m, std::uint64_t seed, int samples);

/// Pairwise and global chain intersections for one discriminant.
Report verify_intersections(std::int64_t delta, const std::vector<ChainBasis>& chains);

SweepResult run_verify(const SweepConfig& config);

}  // namespace quatorder
