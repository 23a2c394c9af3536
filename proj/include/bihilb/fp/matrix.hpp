#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bihilb/fp/field.hpp"

namespace bihilb::fp {

/// Dense row-major matrix over a prime field. Entries are kept reduced.
class FpMatrix {
 public:
  explicit FpMatrix(PrimeField field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(PrimeField field, std::size_t n);
  /// Reduces signed integer entries mod p. All rows must share one length.
  static FpMatrix from_ints(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  u64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<u64> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const u64> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Column c as a vector.
  std::vector<u64> column(std::size_t c) const;

  void append_row(std::span<const u64> values);

  std::vector<u64>& data() { return data_; }
  const std::vector<u64>& data() const { return data_; }

  bool is_zero() const;

  friend bool operator==(const FpMatrix& x, const FpMatrix& y) {
    return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<u64> data_;
};

struct RrefResult {
  FpMatrix matrix;                   // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

std::size_t rank(const FpMatrix& m);
RrefResult rref(const FpMatrix& m);
/// Columns form a basis of the right kernel {v : m v = 0}; cols() x (cols() - rank).
FpMatrix nullspace_basis(const FpMatrix& m);

FpMatrix transpose(const FpMatrix& m);
/// Throws DimensionMismatch on incompatible shapes or fields.
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);
/// [a; b]
FpMatrix stack(const FpMatrix& a, const FpMatrix& b);
/// [a | b]
FpMatrix augment(const FpMatrix& a, const FpMatrix& b);

/// Matrix-vector product a * v.
std::vector<u64> apply(const FpMatrix& a, std::span<const u64> v);

/// Uniform entries from the counter-based generator described in random.hpp.
FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace bihilb::fp
