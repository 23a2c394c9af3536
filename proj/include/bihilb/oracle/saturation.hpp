#pragma once

// Degreewise saturation J = I : B^inf with B = (x_i y_j), and HF_V = dim (S/J).
//
// Working inside Q = S/I, U^0 = 0 and
//   U^{k+1}_mu = { v in Q_mu : x_i y_j v in U^k_{mu+(1,1)} for all i, j },
// so U^k = (0 :_Q B^k) and J_mu / I_mu = U^inf_mu. Sweep k is evaluated on
// [lo, hi + (P - k)(1,1)] for padding P. Once a sweep changes nothing on
// its whole domain, every later sweep would agree, so the window is final.
// If the padding runs out first, PaddingExhausted is thrown.

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "bihilb/oracle/quotient.hpp"
#include "bihilb/regions.hpp"
#include "bihilb/staircase.hpp"

namespace bihilb::oracle {

/// Graded pieces of an ideal over a window, each an RREF row basis in the
/// monomial basis of S_mu.
struct DegreewiseIdeal {
  Window window;
  std::map<Bidegree, FpMatrix, BidegreeLess> pieces;

  std::size_t dim(Bidegree mu) const { return pieces.at(mu).rows(); }
};

struct RetryPolicy {
  int initial_padding = 0;  // 0: max(sigma) - min(window.hi), at least 4
  int max_padding = 32;
};

/// Outcome of one saturation on a window with nonnegative lower corner.
struct SaturatedWindow {
  Window window;
  int padding = 0;
  int sweeps = 0;                       // sweeps until the confirming one
  std::vector<std::size_t> quotient_dim;  // dim (S/I)_mu, window order
  std::vector<FpMatrix> torsion;        // RREF basis of U_mu in Q_mu coordinates

  std::int64_t hf_v(Bidegree mu) const;
  std::int64_t hf_si(Bidegree mu) const;
};

class SaturationOracle {
 public:
  explicit SaturationOracle(Instance inst, unsigned threads = 1);

  const Instance& instance() const { return quotient_.instance(); }
  GradedQuotient& quotient() { return quotient_; }

  /// One attempt with fixed padding (>= 1). Throws PaddingExhausted.
  SaturatedWindow saturate(const Window& window, int padding);

  /// Doubles the padding after each PaddingExhausted up to the policy cap.
  SaturatedWindow saturate(const Window& window, const RetryPolicy& policy = {});

  /// HF_V over any window; cells with a negative coordinate are 0.
  IntGrid hf_v(const Window& window, const RetryPolicy& policy = {});

  /// J_mu in the monomial basis for every window cell.
  DegreewiseIdeal saturated_ideal(const SaturatedWindow& sat);

  int default_padding(const Window& window) const;

 private:
  GradedQuotient quotient_;
  unsigned threads_;
};

DegreewiseIdeal saturate_window(const Instance& inst, const Window& window, int padding);

IntGrid hf_v_oracle(const Instance& inst, const Window& window, const RetryPolicy& policy = {});

/// Minimal corners of { mu in window : grid = deg at every window cell >= mu }.
/// Throws WindowTooSmall unless the window's upper corner dominates both
/// guaranteed corners of `spec`.
Staircase stabilization_staircase(const IntGrid& grid, const BigInt& deg, const RegionSpec& spec);

/// Staircase without the window precondition.
Staircase stabilization_staircase(const IntGrid& grid, const BigInt& deg);

/// Throws ShapeMismatch unless the instance has the spec's shape and n+m
/// forms of bidegree spec.d, and NotCompleteIntersection unless HF_V equals
/// degree_ci on every guaranteed-regular cell of `grid` (which must reach
/// both guaranteed corners).
void validate_complete_intersection(const Instance& inst, const RegionSpec& spec, const IntGrid& grid);

/// Smallest window containing `window` and both guaranteed corners.
Window validation_window(const RegionSpec& spec, const Window& window);

}  // namespace bihilb::oracle
