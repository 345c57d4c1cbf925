#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "quatorder/lattice.hpp"
#include "quatorder/quat.hpp"
#include "quatorder/report.hpp"
#include "quatorder/split.hpp"

namespace quatorder {

enum class ChainCase { NonsquareDirect, NonsquareAuxiliary, Square, AtP };

const char* chain_case_name(ChainCase c);

inline constexpr std::int64_t kDefaultAuxiliaryBound = 200;

/// The intersection of R(q^n) over n, as a rank-2 lattice.
struct ChainBasis {
  ChainCase kind = ChainCase::Square;
  Integer q;
  AlgebraParams base = AlgebraParams::with_prime(1, 1, 1);   // level 1
  AlgebraParams level = AlgebraParams::with_prime(1, 1, 1);  // auxiliary level (or level 1)
  std::array<QuatElem, 2> generators;  // 1 and e, inside R(level)
  ZLattice4 lattice;                   // their span in B(level, p)
  ZLattice4 in_base;                   // the same chain inside R(1) of B(1, p)
};

ChainBasis chain_closed_form(std::int64_t delta, const Integer& q,
                             std::int64_t aux_bound = kDefaultAuxiliaryBound,
                             std::int64_t prime_bound = 100000);

/// The local splitting the chain is taken with (y = 0 in the nonsquare cases).
LocalSplitting chain_splitting(const ChainBasis& c, long precision = kDefaultPrecision);

/// { u in R(level) : lower-left entry of phi(u) = 0 mod q^depth }.
ZLattice4 chain_oracle(const ChainBasis& c, long depth, long precision = kDefaultPrecision);

/// The depth -> infinity limit: lower-left entry exactly zero, computed with
/// the local root kept as a formal square root.
ZLattice4 chain_limit(const ChainBasis& c);

/// Intersection of two chains inside R(1) of the common base algebra.
ZLattice4 pairwise_intersection(const ChainBasis& a, const ChainBasis& b);

/// Throws CaseMismatch unless q is a square case, s a nonsquare case and p
/// the at-p case of the same base algebra.
void check_pairwise_hypotheses(const ChainBasis& q, const ChainBasis& s, const ChainBasis& p);

ZLattice4 global_intersection(std::span<const ChainBasis> chains);

/// Elements of reduced norm 1 in a lattice of rank <= 2 on which the norm is
/// positive definite.
std::vector<QuatElem> norm_one_elements(const ZLattice4& l);

Report verify_chain(const ChainBasis& c, std::span<const long> depths,
                    long precision = kDefaultPrecision);

}  // namespace quatorder
