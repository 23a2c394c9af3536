#include "bihilb/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bihilb/errors.hpp"

namespace bihilb {

std::string Bidegree::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Shape::Shape(int n_, int m_) : n(n_), m(m_) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("shape requires n >= 1 and m >= 1");
  }
}

void validate_degree_list(const DegreeList& degrees) {
  for (const auto& d : degrees) {
    if (d.a < 1 || d.b < 1) {
      throw std::invalid_argument("generator bidegree " + d.str() + " is not >= (1,1)");
    }
  }
}

std::vector<Bidegree> Window::points() const {
  std::vector<Bidegree> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

void validate_window(const Window& w, bool nonnegative) {
  if (!leq(w.lo, w.hi)) {
    throw WindowInvalid("window lower corner " + w.lo.str() + " does not precede " + w.hi.str());
  }
  if (nonnegative && !w.lo.nonnegative()) {
    throw WindowInvalid("window lower corner " + w.lo.str() + " has a negative coordinate");
  }
}

BigInt binom(std::int64_t t, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("binom: k must be nonnegative");
  if (t < k) return 0;
  const std::int64_t kk = std::min(k, t - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= kk; ++i) {
    result *= t - kk + i;
    result /= i;
  }
  return result;
}

BigInt dim_s(const Shape& shape, Bidegree mu) {
  if (!mu.nonnegative()) return 0;
  return binom(shape.n + mu.a, shape.n) * binom(shape.m + mu.b, shape.m);
}

BigInt chi_equal(const Shape& shape, Bidegree d, Bidegree mu) {
  const int r = shape.r();
  BigInt total = 0;
  for (int i = 0; i <= r; ++i) {
    BigInt term = binom(r, i) * dim_s(shape, mu - static_cast<std::int64_t>(i) * d);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt chi_general(const Shape& shape, const DegreeList& degrees, Bidegree mu) {
  if (degrees.size() > kChiSubsetLimit) {
    throw SubsetLimitExceeded("chi_general supports at most " + std::to_string(kChiSubsetLimit) +
                              " generators, got " + std::to_string(degrees.size()));
  }
  std::map<Bidegree, int, BidegreeLess> multiplicity;
  for (const auto& d : degrees) ++multiplicity[d];
  std::vector<std::pair<Bidegree, int>> groups(multiplicity.begin(), multiplicity.end());

  // Walk every choice (j_1, ..., j_g) with 0 <= j_v <= c_v.
  BigInt total = 0;
  std::vector<int> choice(groups.size(), 0);
  while (true) {
    Bidegree shift{0, 0};
    BigInt weight = 1;
    int size = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      shift = shift + static_cast<std::int64_t>(choice[g]) * groups[g].first;
      weight *= binom(groups[g].second, choice[g]);
      size += choice[g];
    }
    BigInt term = weight * dim_s(shape, mu - shift);
    if (size % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    std::size_t g = 0;
    while (g < groups.size() && choice[g] == groups[g].second) choice[g++] = 0;
    if (g == groups.size()) break;
    ++choice[g];
  }
  return total;
}

BigInt degree_ci(const Shape& shape, const DegreeList& degrees) {
  const auto r = static_cast<std::size_t>(shape.r());
  if (degrees.size() != r) {
    throw LengthMismatch("degree_ci needs exactly n+m = " + std::to_string(r) + " degrees, got " +
                         std::to_string(degrees.size()));
  }
  if (std::all_of(degrees.begin(), degrees.end(),
                  [&](const Bidegree& d) { return d == degrees.front(); })) {
    return degree_ci(shape, degrees.front());
  }
  // Enumerate n-subsets X of {0..r-1} as bitmasks.
  BigInt total = 0;
  std::vector<bool> in_x(r, false);
  std::fill(in_x.begin(), in_x.begin() + shape.n, true);
  // prev_permutation over a sorted-descending boolean vector visits every n-subset once.
  do {
    BigInt term = 1;
    for (std::size_t i = 0; i < r; ++i) term *= in_x[i] ? degrees[i].a : degrees[i].b;
    total += term;
  } while (std::prev_permutation(in_x.begin(), in_x.end()));
  return total;
}

BigInt degree_ci(const Shape& shape, Bidegree d) {
  return binom(shape.r(), shape.n) * boost::multiprecision::pow(BigInt(d.a), shape.n) *
         boost::multiprecision::pow(BigInt(d.b), shape.m);
}

BigInt epsilon(const Shape& shape, Bidegree d, Bidegree mu) {
  // v_n = n d - (n+1, 0); the w-branch of Gamma_0 sits at w_m = m d - (0, m+1).
  const Bidegree v = Bidegree{shape.n * d.a - shape.n - 1, shape.n * d.b};
  const Bidegree w = Bidegree{shape.m * d.a, shape.m * d.b - shape.m - 1};
  const Bidegree dv = mu - v;
  const Bidegree dw = mu - w;
  return dim_s(shape, {-dv.a, dv.b}) + dim_s(shape, {dw.a, -dw.b});
}

BigInt hloc_free_dim(const Shape& shape, IrrelevantIdeal which, Bidegree twist, Bidegree mu) {
  // Negative-exponent factors count (x_0...x_n)^{-1} k[x^{-1}] in the given degree.
  const BigInt x_neg = binom(twist.a - mu.a - 1, shape.n);
  const BigInt y_neg = binom(twist.b - mu.b - 1, shape.m);
  const BigInt x_pos = binom(mu.a - twist.a + shape.n, shape.n);
  const BigInt y_pos = binom(mu.b - twist.b + shape.m, shape.m);
  switch (which) {
    case IrrelevantIdeal::B1:
      return x_neg * y_pos;
    case IrrelevantIdeal::B2:
      return x_pos * y_neg;
    case IrrelevantIdeal::MaxIdeal:
      return x_neg * y_neg;
  }
  return 0;
}

}  // namespace bihilb
