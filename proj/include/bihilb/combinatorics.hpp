#pragma once

// Exact counting on the bigraded ring S = k[x_0..x_n, y_0..y_m]: binomials,
// graded-piece dimensions, Koszul Euler characteristics and the degree of a
// complete intersection of points.

#include <cstdint>

#include "bihilb/types.hpp"

namespace bihilb {

/// C(t, k) for t >= k >= 0, and 0 whenever t < k (in particular for every
/// negative t). This is the dimension convention, not the signed binomial.
BigInt binom(std::int64_t t, std::int64_t k);

/// dim S_(a,b) = C(n+a, n) C(m+b, m); zero off the nonnegative quadrant.
BigInt dim_s(const Shape& shape, Bidegree mu);

/// Euler characteristic of the Koszul complex on n+m forms of equal bidegree d
/// at mu: sum_i (-1)^i C(n+m, i) dim S_(mu - i d).
BigInt chi_equal(const Shape& shape, Bidegree d, Bidegree mu);

/// Same for an arbitrary degree list: the signed sum over subsets T of
/// dim S_(mu - sum_T d_t). Subsets are grouped by degree multiplicity, so the
/// cost is the number of distinct sub-multisets rather than 2^r.
/// Throws SubsetLimitExceeded when the list has more than 24 entries.
BigInt chi_general(const Shape& shape, const DegreeList& degrees, Bidegree mu);

inline constexpr std::size_t kChiSubsetLimit = 24;

/// Degree of the complete intersection cut out by n+m forms: sum over splits
/// of {1..n+m} into an n-set X and its complement of prod_X d_i prod_rest e_j.
/// Throws LengthMismatch unless degrees.size() == n+m.
BigInt degree_ci(const Shape& shape, const DegreeList& degrees);

/// Equal-degree fast path C(n+m, n) d^n e^m.
BigInt degree_ci(const Shape& shape, Bidegree d);

/// epsilon(mu) = dim S_(-(a - v_n.a), b - v_n.b) + dim S_(a - w_n.a, -(b - w_n.b)).
BigInt epsilon(const Shape& shape, Bidegree d, Bidegree mu);

enum class IrrelevantIdeal { B1, B2, MaxIdeal };

/// Dimension at mu of the only nonvanishing local cohomology module of S(-twist)
/// supported on the given ideal: H^{n+1}_{B1}, H^{m+1}_{B2} or H^{n+m+2}_m.
BigInt hloc_free_dim(const Shape& shape, IrrelevantIdeal which, Bidegree twist, Bidegree mu);

}  // namespace bihilb
