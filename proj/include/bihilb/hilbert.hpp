#pragma once

// Closed-form Hilbert function of a complete intersection of points cut out
// by n+m forms of equal bidegree (d, e).
//
// Decision tree at mu:
//   negative coordinate             -> Known(0)
//   mu outside every Gamma_i, i>=1  -> Known(chi(mu))          [ChiRule]
//   mu in some Gamma_i, i>=1, but
//     outside Gamma_0               -> Known(deg - chi(sigma-mu)) [DualRule]
//   otherwise                       -> InstanceDependent
// ChiRule cells lying in a guaranteed-regularity quadrant carry the
// Part3Stable tag instead; their value is deg.

#include <optional>
#include <vector>

#include "bihilb/regions.hpp"
#include "bihilb/staircase.hpp"
#include "bihilb/types.hpp"

namespace bihilb {

enum class HFStatus { Known, InstanceDependent };
enum class HFRule { ChiRule, DualRule, Part3Stable };

const char* to_string(HFRule rule);

struct HFResult {
  HFStatus status = HFStatus::InstanceDependent;
  BigInt value = 0;   // meaningful iff known()
  HFRule rule = HFRule::ChiRule;

  static HFResult known(BigInt v, HFRule r) { return {HFStatus::Known, std::move(v), r}; }
  static HFResult instance_dependent() { return {}; }

  bool known() const { return status == HFStatus::Known; }
  friend bool operator==(const HFResult&, const HFResult&) = default;
};

HFResult hf_ci_points(const RegionSpec& spec, Bidegree mu);

struct HFTable {
  RegionSpec spec;
  Window window;
  std::vector<HFResult> cells;               // window iteration order
  std::vector<Classification> classifications;

  const HFResult& cell(Bidegree mu) const { return cells[window.index(mu)]; }
  const Classification& classification(Bidegree mu) const {
    return classifications[window.index(mu)];
  }
};

/// Fills every cell of a window with lower corner >= (0,0).
/// Throws WindowInvalid otherwise. Cells are computed on up to
/// `threads` workers; the result does not depend on the thread count.
HFTable hf_table(const RegionSpec& spec, const Window& window, unsigned threads = 1);

/// dim (I_V / I)_mu where the closed formula applies: zero off Gamma_1, the
/// two-strip count on Gamma_1 \ (Gamma_0 u Gamma_2), InstanceDependent
/// elsewhere.
HFResult dim_iv_mod_i(const RegionSpec& spec, Bidegree mu);

/// Certified part of reg_B(V): the reduced staircase of the two quadrant corners.
Staircase guaranteed_regularity_staircase(const RegionSpec& spec);

}  // namespace bihilb
