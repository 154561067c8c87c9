#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatlin/modp.hpp"
#include "fatlin/simd/kernels.hpp"

namespace fatlin {

/// Dense row-major matrix over GF(p). Rows are padded to a multiple of eight
/// entries so vector kernels can run over whole rows; padding stays zero.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  std::uint32_t& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * stride_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * stride_ + j];
  }

  std::span<std::uint32_t> row(std::size_t i) noexcept { return {data_.data() + i * stride_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t i) const noexcept {
    return {data_.data() + i * stride_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) noexcept;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint32_t> data_;
};

struct EchelonForm {
  std::size_t rank = 0;
  /// pivot_cols[i] is the pivot column of row i, for i < rank.
  std::vector<std::size_t> pivot_cols;
};

/// In-place Gauss-Jordan elimination to reduced row echelon form.
EchelonForm reduce_to_rref(ModMatrix& m, const PrimeField& field,
                           const simd::ModKernels& k = simd::kernels());

std::size_t rank_of(ModMatrix m, const PrimeField& field,
                    const simd::ModKernels& k = simd::kernels());

/// Basis of the right kernel of a matrix already in RREF, one vector per row.
/// The result has cols() - rank rows.
ModMatrix nullspace_from_rref(const ModMatrix& rref, const EchelonForm& echelon,
                              const PrimeField& field);

/// Rank of a small matrix given as a list of rows (no SIMD, no padding).
std::size_t small_rank(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field);

/// Determinant of a square matrix given row-wise.
std::uint32_t determinant(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field);

}  // namespace fatlin
