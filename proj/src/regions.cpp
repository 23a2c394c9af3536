#include "bihilb/regions.hpp"

#include <array>
#include <stdexcept>

namespace bihilb {

RegionSpec::RegionSpec(Shape shape_, Bidegree d_) : shape(shape_), d(d_) {
  if (d.a < 1 || d.b < 1) {
    throw std::invalid_argument("region spec needs generator bidegree >= (1,1), got " + d.str());
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ChiRule:
      return "chi";
    case Verdict::DualRule:
      return "dual";
    case Verdict::InstanceDependent:
      return "instance";
  }
  return "?";
}

Bidegree v_point(const RegionSpec& spec, std::int64_t i) {
  return {i * spec.d.a - spec.shape.n - 1, i * spec.d.b};
}

Bidegree w_point(const RegionSpec& spec, std::int64_t i) {
  return {i * spec.d.a, i * spec.d.b - spec.shape.m - 1};
}

Bidegree sigma(const RegionSpec& spec) {
  const std::int64_t r = spec.r();
  return {r * spec.d.a - spec.shape.n - 1, r * spec.d.b - spec.shape.m - 1};
}

bool in_gamma(const RegionSpec& spec, std::int64_t i, Bidegree mu) {
  const std::int64_t r = spec.r();
  const std::int64_t kv = spec.shape.n + i;
  if (kv >= 0 && kv <= r) {
    const Bidegree v = v_point(spec, kv);
    if (mu.a <= v.a && mu.b >= v.b) return true;
  }
  const std::int64_t kw = spec.shape.m + i;
  if (kw >= 0 && kw <= r) {
    const Bidegree w = w_point(spec, kw);
    if (mu.a >= w.a && mu.b <= w.b) return true;
  }
  return false;
}

bool in_gamma_union_pos(const RegionSpec& spec, Bidegree mu) {
  for (std::int64_t i = 1; i <= gamma_index_max(spec); ++i) {
    if (in_gamma(spec, i, mu)) return true;
  }
  return false;
}

Classification classify(const RegionSpec& spec, Bidegree mu) {
  Classification c;
  c.mu = mu;
  c.in_gamma0 = in_gamma(spec, 0, mu);
  c.in_gamma_neg1 = in_gamma(spec, -1, mu);
  c.in_gamma_pos = in_gamma_union_pos(spec, mu);
  for (std::int64_t i = gamma_index_min(spec); i <= gamma_index_max(spec); ++i) {
    if (in_gamma(spec, i, mu)) c.memberships.push_back(static_cast<int>(i));
  }
  if (!c.in_gamma_pos) {
    c.verdict = Verdict::ChiRule;
  } else if (!c.in_gamma0) {
    c.verdict = Verdict::DualRule;
  } else {
    c.verdict = Verdict::InstanceDependent;
  }
  return c;
}

namespace {

std::array<Bidegree, 2> corner_pair(const RegionSpec& spec) {
  const std::int64_t n = spec.shape.n;
  const std::int64_t m = spec.shape.m;
  const std::int64_t r = spec.r();
  return {Bidegree{n * spec.d.a - n, r * spec.d.b - m},
          Bidegree{r * spec.d.a - n, m * spec.d.b - m}};
}

}  // namespace

bool guaranteed_regular(const RegionSpec& spec, Bidegree mu) {
  const auto corners = corner_pair(spec);
  return leq(corners[0], mu) || leq(corners[1], mu);
}

Staircase guaranteed_corners(const RegionSpec& spec) {
  const auto corners = corner_pair(spec);
  return Staircase::from_points(corners);
}

}  // namespace bihilb
