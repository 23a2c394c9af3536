#include "bihilb/oracle/koszul.hpp"

#include <algorithm>

#include "bihilb/errors.hpp"
#include "bihilb/fp/echelon.hpp"

namespace bihilb::oracle {

namespace {

constexpr std::size_t kBatch = 256;

// All k-subsets of {0..r-1}, lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > r) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == r - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Bidegree degree_of(const Instance& inst, const std::vector<std::size_t>& t) {
  Bidegree d{0, 0};
  for (auto i : t) d = d + inst.forms[i].degree;
  return d;
}

// Appends g * f to `row` (coordinates of S_{deg g + deg f} starting at offset).
void add_product(const Instance& inst, const Monomial& g, const Form& f, u64 sign_neg, std::size_t offset,
                 std::vector<u64>& row) {
  const PrimeField& field = inst.field;
  for (const auto& t : f.terms) {
    const std::size_t col = offset + monomial_index(inst.shape, g * t.mono);
    const u64 c = sign_neg ? field.neg(t.coeff) : t.coeff;
    row[col] = field.add(row[col], c);
  }
}

}  // namespace

FpMatrix ideal_piece(const Instance& inst, Bidegree mu) {
  const std::size_t cols = basis_size(inst.shape, mu);
  fp::EchelonBasis basis(inst.field, cols);
  FpMatrix batch(inst.field, 0, cols);
  std::vector<u64> row(cols);
  for (const auto& f : inst.forms) {
    for (const auto& g : monomial_basis(inst.shape, mu - f.degree)) {
      std::fill(row.begin(), row.end(), 0);
      add_product(inst, g, f, 0, 0, row);
      batch.append_row(row);
      if (batch.rows() == kBatch) {
        basis.add_rows(batch);
        batch = FpMatrix(inst.field, 0, cols);
      }
    }
  }
  basis.add_rows(batch);
  return basis.to_rref().matrix;
}

std::size_t hf_si_oracle(const Instance& inst, Bidegree mu) {
  return basis_size(inst.shape, mu) - ideal_piece(inst, mu).rows();
}

KoszulComplex::KoszulComplex(Instance inst) : inst_(std::move(inst)) {}

std::size_t KoszulComplex::term_dim(std::size_t i, Bidegree mu) const {
  std::size_t total = 0;
  for (const auto& t : subsets(length(), i)) total += basis_size(inst_.shape, mu - degree_of(inst_, t));
  return total;
}

std::size_t KoszulComplex::differential_rank(std::size_t i, Bidegree mu) {
  if (i == 0 || i > length()) return 0;
  {
    std::lock_guard lock(mutex_);
    if (auto it = ranks_.find({i, mu}); it != ranks_.end()) return it->second;
  }
  // Column offsets of the (i-1)-subsets in K_{i-1}.
  const auto targets = subsets(length(), i - 1);
  std::vector<std::size_t> offset(targets.size() + 1, 0);
  for (std::size_t s = 0; s < targets.size(); ++s) {
    offset[s + 1] = offset[s] + basis_size(inst_.shape, mu - degree_of(inst_, targets[s]));
  }
  auto target_index = [&](const std::vector<std::size_t>& t) {
    return static_cast<std::size_t>(std::lower_bound(targets.begin(), targets.end(), t) - targets.begin());
  };

  const std::size_t cols = offset.back();
  fp::EchelonBasis basis(inst_.field, cols);
  FpMatrix batch(inst_.field, 0, cols);
  std::vector<u64> row(cols);
  for (const auto& t : subsets(length(), i)) {
    const Bidegree dt = degree_of(inst_, t);
    for (const auto& g : monomial_basis(inst_.shape, mu - dt)) {
      std::fill(row.begin(), row.end(), 0);
      // d(e_T) = sum_p (-1)^p f_{t_p} e_{T \ t_p}
      for (std::size_t p = 0; p < t.size(); ++p) {
        auto rest = t;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
        add_product(inst_, g, inst_.forms[t[p]], p % 2, offset[target_index(rest)], row);
      }
      batch.append_row(row);
      if (batch.rows() == kBatch) {
        basis.add_rows(batch);
        batch = FpMatrix(inst_.field, 0, cols);
      }
    }
  }
  basis.add_rows(batch);

  std::lock_guard lock(mutex_);
  ranks_[{i, mu}] = basis.rank();
  return basis.rank();
}

std::size_t KoszulComplex::homology_dim(std::int64_t i, Bidegree mu) {
  if (i < 0 || static_cast<std::size_t>(i) > length()) {
    throw IndexOutOfRange("Koszul index " + std::to_string(i) + " outside [0, " + std::to_string(length()) + "]");
  }
  const auto k = static_cast<std::size_t>(i);
  return term_dim(k, mu) - differential_rank(k, mu) - differential_rank(k + 1, mu);
}

std::size_t koszul_homology_dim(const Instance& inst, std::int64_t i, Bidegree mu) {
  KoszulComplex complex(inst);
  return complex.homology_dim(i, mu);
}

}  // namespace bihilb::oracle
