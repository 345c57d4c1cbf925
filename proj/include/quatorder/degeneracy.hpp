#pragma once

#include <array>
#include <span>
#include <vector>

#include "quatorder/hnf.hpp"
#include "quatorder/lattice.hpp"
#include "quatorder/quat.hpp"
#include "quatorder/report.hpp"
#include "quatorder/split.hpp"

namespace quatorder {

enum class DegeneracyCase { Nonsquare, Square, AtP };

const char* degeneracy_case_name(DegeneracyCase c);

/// Integer constants, each reduced into [0, modulus).
struct DegeneracyConstants {
  DegeneracyCase kind = DegeneracyCase::Square;
  Integer modulus;
  Integer c1, c2, c3;       // nonsquare: y - x, 1/p, x (mod q)
  Integer c, c_prime;       // square: (p - sqrt p)/2, (p + sqrt p)/2 (mod q)
  Integer c4, c4_sq, A, B;  // at p: root mod p, root mod p^2, A*p + 2*B*(a*delta*N + c4) = 1
};

struct DegeneracyPair {
  AlgebraParams params = AlgebraParams::with_prime(1, 1, 1);
  Integer q;
  DegeneracyConstants constants;
  std::array<QuatElem, 4> f;  // basis of R(Nq)
  std::array<QuatElem, 4> g;  // basis of the conjugate copy
  IntMatrix f_change;         // row h: coordinates of f_h in the Hashimoto basis
  IntMatrix g_change;
  Integer det_f, det_g;
};

/// Bases of the two copies of R(Nq) inside R(N). Throws RamifiedPlace for
/// q | delta and Unsupported for the nonsquare case with q | N.
DegeneracyPair degeneracy_bases(const AlgebraParams& params, const Integer& q,
                                long precision = kDefaultPrecision, SplitOptions options = {});

/// Sublattice { sum c_h basis[h] : sum c_h residues[h] = 0 mod modulus }.
ZLattice4 congruence_kernel(std::span<const QuatElem> basis, const std::vector<Integer>& residues,
                            const Integer& modulus);

/// Elements of R(N) whose image under s has lower-left entry divisible by
/// q^(v+1), v = v_q(N) (or, with upper_right, upper-right entry divisible by q).
ZLattice4 degeneracy_oracle(const LocalSplitting& s, bool upper_right);

Report verify_degeneracy(const DegeneracyPair& pair, const LocalSplitting& s);

}  // namespace quatorder
