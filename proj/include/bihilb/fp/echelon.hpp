#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bihilb/fp/matrix.hpp"

namespace bihilb::fp {

/// Incrementally maintained reduced row-echelon basis of a row space.
///
/// Every stored row has a 1 in its pivot column and zeros in all other pivot
/// columns, so reducing a vector against the basis is a single
/// vector-matrix product. Rows are absorbed in batches: the batch is reduced
/// by one delayed-reduction product, echelonized locally, and the new pivot
/// columns are then cleared from the old rows by a second product.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  const PrimeField& field() const { return field_; }

  /// Absorbs all rows of `batch` (batch.cols() must equal cols()).
  void add_rows(const FpMatrix& batch);
  void add_row(std::span<const u64> row);

  /// Pivot column of stored row i (insertion order, not sorted).
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::span<const u64> row(std::size_t i) const { return {rows_.data() + i * cols_, cols_}; }

  /// v minus its projection on the stored rows; zero iff v is in the span.
  std::vector<u64> reduce(std::span<const u64> v) const;
  bool contains(std::span<const u64> v) const;

  /// Sorted RREF with exactly rank() rows.
  RrefResult to_rref() const;

  /// Basis of the right kernel of the stored rows, as columns (cols x (cols - rank)).
  FpMatrix kernel() const;

  /// Non-pivot columns in increasing order.
  std::vector<std::size_t> free_columns() const;

 private:
  void absorb(std::vector<u64>& block, std::size_t count);

  PrimeField field_;
  std::size_t cols_;
  std::vector<u64> rows_;              // rank x cols, row-major
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> stored row or -1
};

namespace detail {

/// out[j] = (base[j] + sum_k coef[k] * rows[k][j]) mod p for j < cols, with
/// 128-bit accumulation folded every few products. `rows[k]` points at cols
/// contiguous reduced entries; base may alias out.
void combine(const PrimeField& f, std::size_t cols, const u64* base, std::span<const u64> coefs,
             std::span<const u64* const> rows, u64* out);

}  // namespace detail

}  // namespace bihilb::fp
