#include "bihilb/experiments.hpp"

#include <chrono>
#include <stdexcept>

#include "bihilb/combinatorics.hpp"
#include "bihilb/errors.hpp"
#include "bihilb/parallel.hpp"

namespace bihilb {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

VerifyReport verify_formula_vs_oracle(const RegionSpec& spec, const Window& window, const oracle::Instance& inst,
                                      const std::string& descriptor) {
  validate_window(window, true);
  VerifyReport report{spec, window, descriptor, 0, 0, {}, {}, IntGrid(window), 0, {}};

  auto t0 = Clock::now();
  const HFTable table = hf_table(spec, window, default_threads());
  report.seconds["table"] = since(t0);

  t0 = Clock::now();
  oracle::SaturationOracle sat(inst, default_threads());
  const Window big = oracle::validation_window(spec, window);
  const auto result = sat.saturate(big);
  IntGrid full(big);
  for (const auto& mu : big.points()) full[mu] = result.hf_v(mu);
  report.padding = result.padding;
  report.seconds["oracle"] = since(t0);
  oracle::validate_complete_intersection(inst, spec, full);

  t0 = Clock::now();
  for (const auto& mu : window.points()) {
    const std::int64_t value = full[mu];
    report.oracle[mu] = value;
    const HFResult& cell = table.cell(mu);
    if (!cell.known()) {
      report.informational.push_back({mu, value});
      continue;
    }
    ++report.compared;
    if (cell.value == value) {
      ++report.matched;
    } else {
      report.mismatches.push_back({mu, cell.value, value});
    }
  }
  report.seconds["compare"] = since(t0);
  return report;
}

GenericReport generic_projection_experiment(const RegionSpec& spec, const oracle::Instance& inst,
                                            std::int64_t bound) {
  const Staircase guaranteed = guaranteed_corners(spec);
  for (const auto& c : guaranteed.corners()) {
    if (bound < c.a || bound < c.b) {
      throw std::invalid_argument("bound " + std::to_string(bound) + " below guaranteed corner " + c.str());
    }
  }
  GenericReport report;
  report.spec = spec;
  report.prime = inst.field.modulus();
  report.degree = degree_ci(spec.shape, spec.d);
  report.bound = bound;

  oracle::SaturationOracle sat(inst, default_threads());
  const Window check = oracle::validation_window(spec, Window{{0, 0}, {0, 0}});
  oracle::validate_complete_intersection(inst, spec, sat.hf_v(check));

  const IntGrid xs = sat.hf_v(Window{{0, 0}, {bound, 0}});
  const IntGrid ys = sat.hf_v(Window{{0, 0}, {0, bound}});
  for (std::int64_t t = 0; t <= bound; ++t) {
    report.profile_x.push_back(xs[{t, 0}]);
    report.profile_y.push_back(ys[{0, t}]);
  }
  auto first_hit = [&](const std::vector<std::int64_t>& profile) -> std::optional<std::int64_t> {
    for (std::size_t t = 0; t < profile.size(); ++t) {
      if (BigInt(profile[t]) == report.degree) return static_cast<std::int64_t>(t);
    }
    return std::nullopt;
  };
  report.stable_x = first_hit(report.profile_x);
  report.stable_y = first_hit(report.profile_y);
  // The origin is shared by both axes; count it once.
  for (std::size_t t = 0; t < report.profile_x.size(); ++t) {
    if (BigInt(report.profile_x[t]) < report.degree) ++report.below_degree;
    if (t > 0 && BigInt(report.profile_y[t]) < report.degree) ++report.below_degree;
  }
  return report;
}

GenericReport generic_projection_experiment(const Shape& shape, Bidegree d, std::uint64_t prime, std::uint64_t seed,
                                            std::int64_t bound) {
  const RegionSpec spec(shape, d);
  const oracle::PrimeField field(prime);
  auto report = generic_projection_experiment(spec, oracle::random_instance(shape, d, field, seed), bound);
  report.seed = seed;
  return report;
}

DoublePrimeReport double_prime_check(const oracle::IntegerInstance& integers, const Window& window, std::uint64_t p1,
                                     std::uint64_t p2) {
  if (p1 == p2) throw std::invalid_argument("double prime check needs two different primes");
  const oracle::PrimeField f1(p1);
  const oracle::PrimeField f2(p2);
  DoublePrimeReport report{p1, p2, IntGrid(window), IntGrid(window), {}, {}};
  try {
    report.grid1 = oracle::hf_v_oracle(integers.reduce(f1), window);
    report.grid2 = oracle::hf_v_oracle(integers.reduce(f2), window);
  } catch (const Error& e) {
    report.error = e.what();
    return report;
  }
  for (const auto& mu : window.points()) {
    if (report.grid1[mu] != report.grid2[mu]) report.differing.push_back(mu);
  }
  return report;
}

DoublePrimeReport double_prime_check(const RegionSpec& spec, const Window& window, std::uint64_t seed,
                                     std::uint64_t p1, std::uint64_t p2) {
  return double_prime_check(oracle::random_integer_instance(spec.shape, spec.d, seed), window, p1, p2);
}

}  // namespace bihilb
