#include "quatorder/hnf.hpp"

#include <utility>

#include "quatorder/error.hpp"

namespace quatorder {

namespace {

void row_axpy(std::vector<Integer>& dst, const Integer& f, const std::vector<Integer>& src) {
  for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= f * src[c];
}

void negate_row(std::vector<Integer>& r) {
  for (auto& x : r) x = -x;
}

IntMatrix transpose(const IntMatrix& m, std::size_t columns) {
  IntMatrix t(columns, std::vector<Integer>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < columns; ++c) t[c][r] = m[r][c];
  return t;
}

}  // namespace

HnfWithTransform hnf_with_transform(const IntMatrix& rows, std::size_t columns) {
  HnfWithTransform out;
  out.h = rows;
  for (auto& r : out.h)
    if (r.size() != columns) fail(ErrorCode::InvalidParameters, "ragged integer matrix");
  const std::size_t n = rows.size();
  out.transform.assign(n, std::vector<Integer>(n, 0));
  for (std::size_t r = 0; r < n; ++r) out.transform[r][r] = 1;

  auto& h = out.h;
  auto& u = out.transform;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < columns && pivot_row < n; ++col) {
    // Euclid on the column until a single nonzero entry remains.
    while (true) {
      std::size_t best = n;
      for (std::size_t r = pivot_row; r < n; ++r) {
        if (h[r][col] == 0) continue;
        if (best == n || abs(h[r][col]) < abs(h[best][col])) best = r;
      }
      if (best == n) break;
      std::swap(h[pivot_row], h[best]);
      std::swap(u[pivot_row], u[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < n; ++r) {
        if (h[r][col] == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), h[r][col].get_mpz_t(), h[pivot_row][col].get_mpz_t());
        row_axpy(h[r], f, h[pivot_row]);
        row_axpy(u[r], f, u[pivot_row]);
        if (h[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h[pivot_row][col] == 0) continue;
    if (h[pivot_row][col] < 0) {
      negate_row(h[pivot_row]);
      negate_row(u[pivot_row]);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h[r][col].get_mpz_t(), h[pivot_row][col].get_mpz_t());
      row_axpy(h[r], f, h[pivot_row]);
      row_axpy(u[r], f, u[pivot_row]);
    }
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

IntMatrix hnf(const IntMatrix& rows, std::size_t columns) {
  auto res = hnf_with_transform(rows, columns);
  res.h.resize(res.rank);
  return res.h;
}

IntMatrix left_kernel(const IntMatrix& rows, std::size_t columns) {
  auto res = hnf_with_transform(rows, columns);
  IntMatrix k(res.transform.begin() + static_cast<std::ptrdiff_t>(res.rank), res.transform.end());
  return hnf(k, rows.size());
}

IntMatrix right_kernel(const IntMatrix& rows, std::size_t columns) {
  if (rows.empty()) {
    IntMatrix id(columns, std::vector<Integer>(columns, 0));
    for (std::size_t c = 0; c < columns; ++c) id[c][c] = 1;
    return id;
  }
  return left_kernel(transpose(rows, columns), rows.size());
}

IntMatrix saturate(const IntMatrix& rows, std::size_t columns) {
  IntMatrix orth = right_kernel(rows, columns);
  return hnf(right_kernel(orth, columns), columns);
}

IntMatrix intersect_rows(const IntMatrix& a, const IntMatrix& b, std::size_t columns) {
  IntMatrix ha = hnf(a, columns);
  IntMatrix hb = hnf(b, columns);
  if (ha.empty() || hb.empty()) return {};
  IntMatrix stacked = ha;
  stacked.insert(stacked.end(), hb.begin(), hb.end());
  IntMatrix kernel = left_kernel(stacked, columns);
  IntMatrix gens;
  for (const auto& k : kernel) {
    std::vector<Integer> v(columns, 0);
    for (std::size_t r = 0; r < ha.size(); ++r)
      for (std::size_t c = 0; c < columns; ++c) v[c] += k[r] * ha[r][c];
    gens.push_back(std::move(v));
  }
  return hnf(gens, columns);
}

bool hnf_contains(const IntMatrix& basis, const std::vector<Integer>& v) {
  std::vector<Integer> rest = v;
  std::size_t col = 0;
  for (const auto& row : basis) {
    while (col < rest.size() && row[col] == 0) {
      if (rest[col] != 0) return false;
      ++col;
    }
    if (col == rest.size()) break;
    if (!mpz_divisible_p(rest[col].get_mpz_t(), row[col].get_mpz_t())) return false;
    Integer f = rest[col] / row[col];
    row_axpy(rest, f, row);
    ++col;
  }
  for (const auto& x : rest)
    if (x != 0) return false;
  return true;
}

Integer hnf_determinant(const IntMatrix& basis) {
  Integer d = 1;
  std::size_t col = 0;
  for (const auto& row : basis) {
    while (col < row.size() && row[col] == 0) ++col;
    if (col == row.size()) break;
    d *= row[col];
    ++col;
  }
  return d;
}

}  // namespace quatorder
