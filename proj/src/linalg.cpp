#include "fatlin/linalg.hpp"

#include <algorithm>
#include <utility>

namespace fatlin {

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 7) / 8 * 8), data_(rows * stride_, 0) {}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

EchelonForm reduce_to_rref(ModMatrix& m, const PrimeField& field, const simd::ModKernels& k) {
  EchelonForm out;
  const std::uint32_t p = field.prime();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);

    std::uint32_t* prow = m.row(r).data();
    std::uint32_t inv = field.inv(prow[c]);
    k.scale(prow + c, inv, field.shoup(inv), p, cols - c);

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t f = m(i, c);
      if (f == 0) continue;
      k.submul(m.row(i).data() + c, prow + c, f, field.shoup(f), p, cols - c);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank_of(ModMatrix m, const PrimeField& field, const simd::ModKernels& k) {
  return reduce_to_rref(m, field, k).rank;
}

ModMatrix nullspace_from_rref(const ModMatrix& rref, const EchelonForm& echelon,
                              const PrimeField& field) {
  const std::size_t cols = rref.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : echelon.pivot_cols) is_pivot[c] = true;

  ModMatrix basis(cols - echelon.rank, cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < echelon.rank; ++i) {
      basis(out, echelon.pivot_cols[i]) = field.neg(rref(i, free));
    }
    ++out;
  }
  return basis;
}

std::size_t small_rank(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::uint32_t inv = field.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      std::uint32_t f = field.mul(rows[i][c], inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
      }
    }
    ++r;
  }
  return r;
}

std::uint32_t determinant(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field) {
  const std::size_t n = rows.size();
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && rows[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(rows[c], rows[piv]);
      det = field.neg(det);
    }
    det = field.mul(det, rows[c][c]);
    std::uint32_t inv = field.inv(rows[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      std::uint32_t f = field.mul(rows[i][c], inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[c][j]));
      }
    }
  }
  return det;
}

}  // namespace fatlin
