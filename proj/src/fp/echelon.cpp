#include "bihilb/fp/echelon.hpp"

#include <algorithm>
#include <numeric>

#include "bihilb/errors.hpp"

namespace bihilb::fp {

namespace detail {

void combine(const PrimeField& f, std::size_t cols, const u64* base, std::span<const u64> coefs,
             std::span<const u64* const> rows, u64* out) {
  // Products are < 2^124. Folding hi*2^64 + lo -> hi*(2^64 mod p) + lo every
  // seven products keeps the accumulator below 2^128.
  constexpr int kFoldEvery = 7;
  thread_local std::vector<u128> acc;
  acc.resize(cols);
  if (base != nullptr) {
    for (std::size_t j = 0; j < cols; ++j) acc[j] = base[j];
  } else {
    std::fill(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(cols), u128{0});
  }
  const u64 r64 = f.two64();
  int pending = 0;
  for (std::size_t k = 0; k < coefs.size(); ++k) {
    const u64 c = coefs[k];
    if (c == 0) continue;
    const u64* row = rows[k];
    u128* a = acc.data();
    for (std::size_t j = 0; j < cols; ++j) a[j] += static_cast<u128>(c) * row[j];
    if (++pending == kFoldEvery) {
      for (std::size_t j = 0; j < cols; ++j) {
        a[j] = static_cast<u128>(static_cast<u64>(a[j] >> 64)) * r64 + static_cast<u64>(a[j]);
      }
      pending = 0;
    }
  }
  for (std::size_t j = 0; j < cols; ++j) out[j] = f.reduce128(acc[j]);
}

}  // namespace detail

namespace {
constexpr std::size_t kBatchRows = 64;
}

EchelonBasis::EchelonBasis(PrimeField field, std::size_t cols)
    : field_(field), cols_(cols), pivot_row_(cols, -1) {}

void EchelonBasis::add_rows(const FpMatrix& batch) {
  if (batch.cols() != cols_) {
    throw DimensionMismatch("echelon basis has " + std::to_string(cols_) + " columns, batch has " +
                            std::to_string(batch.cols()));
  }
  std::vector<u64> block;
  for (std::size_t start = 0; start < batch.rows(); start += kBatchRows) {
    const std::size_t count = std::min(kBatchRows, batch.rows() - start);
    block.assign(batch.data().begin() + static_cast<std::ptrdiff_t>(start * cols_),
                 batch.data().begin() + static_cast<std::ptrdiff_t>((start + count) * cols_));
    absorb(block, count);
  }
}

void EchelonBasis::add_row(std::span<const u64> row) {
  if (row.size() != cols_) throw DimensionMismatch("row length does not match echelon basis");
  std::vector<u64> block(row.begin(), row.end());
  absorb(block, 1);
}

void EchelonBasis::absorb(std::vector<u64>& block, std::size_t count) {
  const u64 p = field_.modulus();
  const std::size_t old_rank = rank();

  // 1. Clear the existing pivot columns from the batch.
  if (old_rank > 0) {
    std::vector<const u64*> basis_rows(old_rank);
    for (std::size_t k = 0; k < old_rank; ++k) basis_rows[k] = rows_.data() + k * cols_;
    std::vector<u64> coefs(old_rank);
    for (std::size_t i = 0; i < count; ++i) {
      u64* r = block.data() + i * cols_;
      bool any = false;
      for (std::size_t k = 0; k < old_rank; ++k) {
        const u64 v = r[pivots_[k]];
        coefs[k] = v == 0 ? 0 : p - v;
        any |= v != 0;
      }
      if (any) detail::combine(field_, cols_, r, coefs, basis_rows, r);
    }
  }

  // 2. Gauss-Jordan inside the batch.
  std::vector<std::size_t> new_pivots;
  std::size_t placed = 0;
  for (std::size_t col = 0; col < cols_ && placed < count; ++col) {
    if (pivot_row_[col] >= 0) continue;
    std::size_t found = count;
    for (std::size_t i = placed; i < count; ++i) {
      if (block[i * cols_ + col] != 0) {
        found = i;
        break;
      }
    }
    if (found == count) continue;
    u64* prow = block.data() + placed * cols_;
    if (found != placed) {
      std::swap_ranges(prow, prow + cols_, block.data() + found * cols_);
    }
    const u64 inv = field_.inv(prow[col]);
    const u64 inv_p = field_.precon(inv);
    for (std::size_t j = col; j < cols_; ++j) {
      if (prow[j] != 0) prow[j] = field_.mul_precon(inv, inv_p, prow[j]);
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (i == placed) continue;
      u64* r = block.data() + i * cols_;
      const u64 v = r[col];
      if (v == 0) continue;
      const u64 c = p - v;
      const u64 cp = field_.precon(c);
      for (std::size_t j = col; j < cols_; ++j) {
        if (prow[j] != 0) r[j] = field_.add(r[j], field_.mul_precon(c, cp, prow[j]));
      }
    }
    new_pivots.push_back(col);
    ++placed;
  }
  if (placed == 0) return;

  // 3. Clear the new pivot columns from the old rows.
  if (old_rank > 0) {
    std::vector<const u64*> new_rows(placed);
    for (std::size_t t = 0; t < placed; ++t) new_rows[t] = block.data() + t * cols_;
    std::vector<u64> coefs(placed);
    for (std::size_t k = 0; k < old_rank; ++k) {
      u64* r = rows_.data() + k * cols_;
      bool any = false;
      for (std::size_t t = 0; t < placed; ++t) {
        const u64 v = r[new_pivots[t]];
        coefs[t] = v == 0 ? 0 : p - v;
        any |= v != 0;
      }
      if (any) detail::combine(field_, cols_, r, coefs, new_rows, r);
    }
  }

  // 4. Append.
  rows_.insert(rows_.end(), block.begin(), block.begin() + static_cast<std::ptrdiff_t>(placed * cols_));
  for (std::size_t t = 0; t < placed; ++t) {
    pivot_row_[new_pivots[t]] = static_cast<std::ptrdiff_t>(old_rank + t);
    pivots_.push_back(new_pivots[t]);
  }
}

std::vector<u64> EchelonBasis::reduce(std::span<const u64> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match echelon basis");
  std::vector<u64> out(v.begin(), v.end());
  if (rank() == 0) return out;
  const u64 p = field_.modulus();
  std::vector<const u64*> basis_rows(rank());
  std::vector<u64> coefs(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    basis_rows[k] = rows_.data() + k * cols_;
    const u64 c = v[pivots_[k]];
    coefs[k] = c == 0 ? 0 : p - c;
  }
  detail::combine(field_, cols_, out.data(), coefs, basis_rows, out.data());
  return out;
}

bool EchelonBasis::contains(std::span<const u64> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](u64 x) { return x == 0; });
}

RrefResult EchelonBasis::to_rref() const {
  std::vector<std::size_t> order(rank());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pivots_[x] < pivots_[y]; });
  RrefResult out{FpMatrix(field_, rank(), cols_), {}};
  out.pivots.reserve(rank());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto src = row(order[i]);
    std::copy(src.begin(), src.end(), out.matrix.row(i).begin());
    out.pivots.push_back(pivots_[order[i]]);
  }
  return out;
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<std::size_t> out;
  out.reserve(cols_ - rank());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_row_[c] < 0) out.push_back(c);
  }
  return out;
}

FpMatrix EchelonBasis::kernel() const {
  const auto free = free_columns();
  FpMatrix out(field_, cols_, free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    const std::size_t f = free[t];
    out(f, t) = 1;
    for (std::size_t k = 0; k < rank(); ++k) {
      out(pivots_[k], t) = field_.neg(rows_[k * cols_ + f]);
    }
  }
  return out;
}

}  // namespace bihilb::fp
