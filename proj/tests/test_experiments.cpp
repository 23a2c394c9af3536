#include <algorithm>

#include "bihilb/experiments.hpp"
#include "bihilb/render.hpp"
#include "doctest.h"
#include <json.hpp>

using namespace bihilb;

namespace {
const oracle::PrimeField kSmall(32003);
}

TEST_CASE("verify the diagonal example") {
  const RegionSpec spec(Shape(2, 2), {2, 2});
  const VerifyReport r =
      verify_formula_vs_oracle(spec, Window{{0, 0}, {7, 7}}, oracle::diagonal_example(kSmall), "diagonal");
  CHECK(r.compared == 56);
  CHECK(r.matched == 56);
  CHECK(r.ok());
  REQUIRE(r.informational.size() == 8);
  for (const auto& cell : r.informational) CHECK((cell.oracle == 24 || cell.oracle == 72));
  CHECK(r.oracle[{6, 0}] == 24);
  CHECK(r.oracle[{1, 7}] == 72);

  const auto doc = nlohmann::json::parse(render_report(r, Format::Json));
  CHECK(doc["matched"] == 56);
}

TEST_CASE("verify small random instances") {
  const RegionSpec spec(Shape(1, 1), {2, 2});
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = oracle::random_instance(spec.shape, spec.d, kSmall, seed);
    const VerifyReport r = verify_formula_vs_oracle(spec, Window{{0, 0}, {5, 5}}, inst, "random");
    CHECK(r.ok());
    CHECK(r.compared == r.matched);
  }
}

TEST_CASE("generic projection experiment") {
  const GenericReport small = generic_projection_experiment(Shape(1, 1), {1, 1}, 32003, 1, 4);
  CHECK(small.degree == 2);
  REQUIRE(small.generic());
  CHECK(*small.stable_x <= 2);
  CHECK(*small.stable_y <= 2);
  CHECK(std::is_sorted(small.profile_x.begin(), small.profile_x.end()));

  const RegionSpec spec(Shape(2, 2), {2, 2});
  const GenericReport diag = generic_projection_experiment(spec, oracle::diagonal_example(kSmall), 8);
  CHECK_FALSE(diag.generic());
  CHECK(diag.profile_x[6] == 24);
  CHECK(diag.profile_x[8] == 24);
  CHECK(std::all_of(diag.profile_y.begin(), diag.profile_y.end(), [](auto v) { return v <= 96; }));
  CHECK_THROWS_AS(generic_projection_experiment(spec, oracle::diagonal_example(kSmall), 5), std::invalid_argument);
}

TEST_CASE("two-prime consistency") {
  const Window w{{0, 0}, {4, 4}};
  const DoublePrimeReport same = double_prime_check(oracle::diagonal_example_integers(), w, 2147483659ull, 32003);
  CHECK(same.error.empty());
  CHECK(same.identical());

  const RegionSpec spec(Shape(1, 1), {1, 1});
  CHECK_THROWS_AS(double_prime_check(spec, w, 3, 32003, 32003), std::invalid_argument);

  // modulo 2 the diagonal form collapses; the harness must report rather than crash
  DoublePrimeReport tiny;
  CHECK_NOTHROW(tiny = double_prime_check(oracle::diagonal_example_integers(), w, 2, 32003));
  CHECK(tiny.p1 == 2);
}
