#include "bihilb/hilbert.hpp"

#include "bihilb/combinatorics.hpp"
#include "bihilb/parallel.hpp"

namespace bihilb {

const char* to_string(HFRule rule) {
  switch (rule) {
    case HFRule::ChiRule:
      return "chi";
    case HFRule::DualRule:
      return "dual";
    case HFRule::Part3Stable:
      return "stable";
  }
  return "?";
}

HFResult hf_ci_points(const RegionSpec& spec, Bidegree mu) {
  if (!mu.nonnegative()) return HFResult::known(0, HFRule::ChiRule);
  if (!in_gamma_union_pos(spec, mu)) {
    if (guaranteed_regular(spec, mu)) {
      return HFResult::known(degree_ci(spec.shape, spec.d), HFRule::Part3Stable);
    }
    return HFResult::known(chi_equal(spec.shape, spec.d, mu), HFRule::ChiRule);
  }
  if (!in_gamma(spec, 0, mu)) {
    return HFResult::known(
        degree_ci(spec.shape, spec.d) - chi_equal(spec.shape, spec.d, sigma(spec) - mu),
        HFRule::DualRule);
  }
  return HFResult::instance_dependent();
}

HFTable hf_table(const RegionSpec& spec, const Window& window, unsigned threads) {
  validate_window(window, /*nonnegative=*/true);
  HFTable table{spec, window, std::vector<HFResult>(window.size()),
                std::vector<Classification>(window.size())};
  parallel_for(window.size(), threads, [&](std::size_t i) {
    const Bidegree mu = window.at(i);
    table.cells[i] = hf_ci_points(spec, mu);
    table.classifications[i] = classify(spec, mu);
  });
  return table;
}

HFResult dim_iv_mod_i(const RegionSpec& spec, Bidegree mu) {
  if (!mu.nonnegative() || !in_gamma(spec, 1, mu)) return HFResult::known(0, HFRule::ChiRule);
  if (in_gamma(spec, 0, mu) || in_gamma(spec, 2, mu)) return HFResult::instance_dependent();
  const Shape& s = spec.shape;
  const Bidegree dv = mu - v_point(spec, s.n + 1);
  const Bidegree dw = mu - w_point(spec, s.m + 1);
  BigInt value = binom(s.r(), s.n + 1) * dim_s(s, {-dv.a, dv.b}) +
                 binom(s.r(), s.m + 1) * dim_s(s, {dw.a, -dw.b});
  return HFResult::known(std::move(value), HFRule::DualRule);
}

Staircase guaranteed_regularity_staircase(const RegionSpec& spec) {
  return guaranteed_corners(spec);
}

}  // namespace bihilb
