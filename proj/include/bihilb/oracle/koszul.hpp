#pragma once

// Direct linear algebra on graded pieces of S in the monomial basis: the
// ideal I_mu, dim (S/I)_mu, and the homology of the Koszul complex on the
// instance's forms.

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>

#include "bihilb/fp/matrix.hpp"
#include "bihilb/oracle/instance.hpp"

namespace bihilb::oracle {

using fp::FpMatrix;

/// RREF (exactly rank rows) spanning I_mu = sum_i f_i S_{mu - deg f_i}.
FpMatrix ideal_piece(const Instance& inst, Bidegree mu);

/// dim S_mu - rank I_mu.
std::size_t hf_si_oracle(const Instance& inst, Bidegree mu);

/// Homology of K(f, S) in bidegree mu. Ranks of the differentials are cached,
/// so neighbouring homological degrees share work. Thread-safe.
class KoszulComplex {
 public:
  explicit KoszulComplex(Instance inst);

  const Instance& instance() const { return inst_; }
  std::size_t length() const { return inst_.forms.size(); }

  /// dim K_i at mu: sum over i-subsets T of dim S_{mu - deg T}.
  std::size_t term_dim(std::size_t i, Bidegree mu) const;

  /// rank of d_i : K_i -> K_{i-1} at mu (zero for i = 0 and i > length()).
  std::size_t differential_rank(std::size_t i, Bidegree mu);

  /// dim H_i at mu. Throws IndexOutOfRange unless 0 <= i <= length().
  std::size_t homology_dim(std::int64_t i, Bidegree mu);

 private:
  Instance inst_;
  std::mutex mutex_;
  struct KeyLess {
    bool operator()(const std::pair<std::size_t, Bidegree>& u, const std::pair<std::size_t, Bidegree>& v) const {
      return u.first != v.first ? u.first < v.first : BidegreeLess{}(u.second, v.second);
    }
  };
  std::map<std::pair<std::size_t, Bidegree>, std::size_t, KeyLess> ranks_;
};

/// One-shot convenience wrapper around KoszulComplex.
std::size_t koszul_homology_dim(const Instance& inst, std::int64_t i, Bidegree mu);

}  // namespace bihilb::oracle
