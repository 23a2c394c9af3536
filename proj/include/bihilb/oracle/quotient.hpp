#pragma once

// Graded pieces Q_nu = (S/I)_nu of a bigraded quotient together with the
// multiplication maps x_k : Q_nu -> Q_{nu+(1,0)} and y_j : Q_nu -> Q_{nu+(0,1)}.
//
// Q_nu is never formed inside S_nu. For a >= 1 it is presented as
//   (Q_{nu-(1,0)})^{n+1} / (Koszul relations + generators)
// using x_0..x_n; for b >= 1 the same with y_0..y_m. Whichever presentation
// has fewer columns is used, so all matrices are sized by dim (S/I), not by
// dim S. Every basis vector of Q_nu is the class of a monomial.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bihilb/fp/matrix.hpp"
#include "bihilb/oracle/instance.hpp"

namespace bihilb::oracle {

using fp::FpMatrix;

class GradedQuotient {
 public:
  explicit GradedQuotient(Instance inst);

  const Instance& instance() const { return inst_; }
  const PrimeField& field() const { return inst_.field; }

  /// Builds Q at every bidegree in [0, nu] (componentwise). No-op for
  /// bidegrees with a negative coordinate.
  void ensure(Bidegree nu);

  /// dim Q_nu; zero for negative coordinates. Builds on demand.
  std::size_t dim(Bidegree nu);

  /// Multiplication by x_k (cls 0) or y_k (cls 1) from Q_source, as a
  /// dim Q_target x dim Q_source matrix. Builds on demand.
  const FpMatrix& map(int cls, int k, Bidegree source);

  /// Same, for callers that already ensured the target; safe for concurrent use.
  const FpMatrix& built_map(int cls, int k, Bidegree source) const;
  std::size_t built_dim(Bidegree nu) const;

  /// Images in Q_nu of the monomial basis of S_nu (dim Q x dim S). Builds on demand.
  const FpMatrix& normal_forms(Bidegree nu);

 private:
  struct Piece {
    std::size_t q = 0;
    int dir = -1;                        // presentation variables: 0 x, 1 y, -1 base
    std::vector<std::size_t> origin;     // non-pivot presentation column of each basis vector
    std::vector<FpMatrix> out[2];        // out[cls][k]: map into the piece one step up
    std::optional<FpMatrix> lift[2];     // right inverse of the stacked maps into this piece
    std::optional<FpMatrix> nf;
  };

  // Polynomial of bidegree deg(f) - e_cls: the part of f whose first
  // variable of class cls is the k-th one, divided by it.
  struct Split {
    Bidegree degree;
    std::vector<std::pair<Monomial, u64>> terms;
  };

  Piece& piece(Bidegree nu) { return pieces_.at(nu); }
  const Piece& piece(Bidegree nu) const { return pieces_.at(nu); }
  bool built(Bidegree nu) const { return pieces_.count(nu) > 0; }

  void build(Bidegree nu);
  const FpMatrix& lift(Bidegree nu, int cls);
  const std::vector<std::vector<u64>>& chain(std::size_t form, int cls, int k, std::int64_t level);
  std::vector<u64> normal_form(const Split& poly);

  Instance inst_;
  std::map<Bidegree, Piece, BidegreeLess> pieces_;
  std::vector<std::vector<Split>> splits_[2];  // splits_[cls][form][k]
  // chains_[cls][form][k][t][g]: normal form of split * g for monomials g of
  // the other class and degree t, in monomial_basis order.
  std::vector<std::vector<std::vector<std::vector<std::vector<u64>>>>> chains_[2];
};

}  // namespace bihilb::oracle
