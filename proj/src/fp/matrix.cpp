#include "bihilb/fp/matrix.hpp"

#include <algorithm>

#include "bihilb/errors.hpp"
#include "bihilb/fp/echelon.hpp"
#include "bihilb/fp/random.hpp"

namespace bihilb::fp {

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_ints(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

std::vector<u64> FpMatrix::column(std::size_t c) const {
  std::vector<u64> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void FpMatrix::append_row(std::span<const u64> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DimensionMismatch("appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](u64 x) { return x == 0; });
}

std::size_t rank(const FpMatrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  basis.add_rows(m);
  return basis.rank();
}

RrefResult rref(const FpMatrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  basis.add_rows(m);
  RrefResult reduced = basis.to_rref();
  FpMatrix full(m.field(), m.rows(), m.cols());
  std::copy(reduced.matrix.data().begin(), reduced.matrix.data().end(), full.data().begin());
  return {std::move(full), std::move(reduced.pivots)};
}

FpMatrix nullspace_basis(const FpMatrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  basis.add_rows(m);
  return basis.kernel();
}

FpMatrix transpose(const FpMatrix& m) {
  FpMatrix t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.field() == b.field())) throw DimensionMismatch("multiply: matrices over different fields");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  FpMatrix out(a.field(), a.rows(), b.cols());
  if (b.cols() == 0) return out;
  std::vector<const u64*> brows(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) brows[k] = b.row(k).data();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    detail::combine(a.field(), b.cols(), nullptr, a.row(i), brows, out.row(i).data());
  }
  return out;
}

FpMatrix stack(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.field() == b.field()) || a.cols() != b.cols()) {
    throw DimensionMismatch("stack: column counts or fields differ");
  }
  FpMatrix out(a.field(), a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), out.data().begin());
  std::copy(b.data().begin(), b.data().end(), out.data().begin() + static_cast<std::ptrdiff_t>(a.data().size()));
  return out;
}

FpMatrix augment(const FpMatrix& a, const FpMatrix& b) {
  if (!(a.field() == b.field()) || a.rows() != b.rows()) {
    throw DimensionMismatch("augment: row counts or fields differ");
  }
  FpMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
    std::copy(b.row(r).begin(), b.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return out;
}

std::vector<u64> apply(const FpMatrix& a, std::span<const u64> v) {
  if (v.size() != a.cols()) throw DimensionMismatch("apply: vector length mismatch");
  std::vector<u64> out(a.rows());
  const PrimeField& f = a.field();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    u128 acc = 0;
    int pending = 0;
    const auto row = a.row(r);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      acc += static_cast<u128>(row[c]) * v[c];
      if (++pending == 7) {
        acc = static_cast<u128>(static_cast<u64>(acc >> 64)) * f.two64() + static_cast<u64>(acc);
        pending = 0;
      }
    }
    out[r] = f.reduce128(acc);
  }
  return out;
}

FpMatrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  CounterRng rng(seed);
  FpMatrix m(field, rows, cols);
  for (auto& x : m.data()) x = rng.uniform(field.modulus());
  return m;
}

}  // namespace bihilb::fp
