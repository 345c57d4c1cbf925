#pragma once

#include <cstddef>
#include <vector>

#include "quatorder/rational.hpp"

namespace quatorder {

/// Row-major integer matrix; each row is a lattice generator.
using IntMatrix = std::vector<std::vector<Integer>>;

struct HnfWithTransform {
  IntMatrix h;          // same shape as the input; zero rows last
  IntMatrix transform;  // unimodular, transform * input == h
  std::size_t rank = 0;
};

/// Row Hermite normal form: pivots positive and strictly moving right,
/// entries above a pivot reduced into [0, pivot).
HnfWithTransform hnf_with_transform(const IntMatrix& rows, std::size_t columns);

/// Nonzero rows of the row HNF; the canonical basis of the row lattice.
IntMatrix hnf(const IntMatrix& rows, std::size_t columns);

/// Basis (HNF) of { u : u * rows == 0 }.
IntMatrix left_kernel(const IntMatrix& rows, std::size_t columns);

/// Basis (HNF) of { x in Z^columns : rows * x == 0 }.
IntMatrix right_kernel(const IntMatrix& rows, std::size_t columns);

/// (rational span of the rows) intersected with Z^columns.
IntMatrix saturate(const IntMatrix& rows, std::size_t columns);

/// HNF of the intersection of two row lattices in Z^columns.
IntMatrix intersect_rows(const IntMatrix& a, const IntMatrix& b, std::size_t columns);

/// Membership of v in the lattice spanned by an HNF basis.
bool hnf_contains(const IntMatrix& basis, const std::vector<Integer>& v);

/// Product of the pivots of a full-rank square HNF.
Integer hnf_determinant(const IntMatrix& basis);

}  // namespace quatorder
