#pragma once

#include <span>
#include <vector>

#include "bihilb/types.hpp"

namespace bihilb {

/// An up-closed subset of Z^2 stored as its antichain of minimal corners,
/// sorted by increasing a (hence strictly decreasing b).
class Staircase {
 public:
  Staircase() = default;

  /// Reduces an arbitrary finite generating set to its minimal antichain.
  static Staircase from_points(std::span<const Bidegree> points);

  bool contains(Bidegree mu) const;

  /// True iff every point of `other` lies in this region.
  bool contains(const Staircase& other) const;

  const std::vector<Bidegree>& corners() const { return corners_; }
  bool empty() const { return corners_.empty(); }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Bidegree> corners_;
};

}  // namespace bihilb
