#include "bihilb/staircase.hpp"

#include <algorithm>
#include <limits>

namespace bihilb {

Staircase Staircase::from_points(std::span<const Bidegree> points) {
  std::vector<Bidegree> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), BidegreeLess{});
  Staircase st;
  // After sorting by (a, b), a point is minimal iff its b is below every b seen so far.
  std::int64_t best_b = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : sorted) {
    if (p.b < best_b) {
      st.corners_.push_back(p);
      best_b = p.b;
    }
  }
  return st;
}

bool Staircase::contains(Bidegree mu) const {
  return std::any_of(corners_.begin(), corners_.end(), [&](Bidegree c) { return leq(c, mu); });
}

bool Staircase::contains(const Staircase& other) const {
  return std::all_of(other.corners_.begin(), other.corners_.end(),
                     [&](Bidegree c) { return contains(c); });
}

}  // namespace bihilb
