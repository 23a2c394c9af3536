#pragma once

// Lattice geometry of n+m forms of equal bidegree d = (d, e): the Koszul
// corner points v_i and w_i, the duality centre sigma, and the regions
// Gamma_i = (v_{n+i} + (-N, N)) u (w_{m+i} + (N, -N)) where each half-strip
// is present only when its Koszul index lies in [0, n+m].

#include <vector>

#include "bihilb/staircase.hpp"
#include "bihilb/types.hpp"

namespace bihilb {

struct RegionSpec {
  Shape shape;
  Bidegree d;

  RegionSpec() = default;
  RegionSpec(Shape shape_, Bidegree d_);

  int r() const { return shape.r(); }
  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

enum class Verdict { ChiRule, DualRule, InstanceDependent };

const char* to_string(Verdict v);

struct Classification {
  Bidegree mu;
  bool in_gamma0 = false;
  bool in_gamma_pos = false;   // mu in the union of Gamma_i, i >= 1
  bool in_gamma_neg1 = false;
  Verdict verdict = Verdict::ChiRule;
  std::vector<int> memberships;  // every i with mu in Gamma_i, ascending
};

/// v_i = i d - (n+1, 0).
Bidegree v_point(const RegionSpec& spec, std::int64_t i);
/// w_i = i d - (0, m+1).
Bidegree w_point(const RegionSpec& spec, std::int64_t i);
/// sigma = (n+m) d - (n+1, m+1).
Bidegree sigma(const RegionSpec& spec);

bool in_gamma(const RegionSpec& spec, std::int64_t i, Bidegree mu);
bool in_gamma_union_pos(const RegionSpec& spec, Bidegree mu);

/// Smallest and largest i for which Gamma_i can be nonempty.
inline std::int64_t gamma_index_min(const RegionSpec& spec) {
  return -static_cast<std::int64_t>(std::max(spec.shape.n, spec.shape.m));
}
inline std::int64_t gamma_index_max(const RegionSpec& spec) {
  return static_cast<std::int64_t>(std::max(spec.shape.n, spec.shape.m));
}

Classification classify(const RegionSpec& spec, Bidegree mu);

/// mu >= (nd - n, (n+m)e - m) or mu >= ((n+m)d - n, me - m).
bool guaranteed_regular(const RegionSpec& spec, Bidegree mu);

/// The two corners above, as a reduced staircase.
Staircase guaranteed_corners(const RegionSpec& spec);

}  // namespace bihilb
