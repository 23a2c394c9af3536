#pragma once

// Harnesses that pit the closed-form table against the instance oracle,
// probe the axis profiles of a random complete intersection, and compare
// oracle grids across two primes.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bihilb/hilbert.hpp"
#include "bihilb/oracle/instance.hpp"
#include "bihilb/oracle/saturation.hpp"

namespace bihilb {

struct CellMismatch {
  Bidegree mu;
  BigInt formula;
  std::int64_t oracle = 0;
};

struct OracleCell {
  Bidegree mu;
  std::int64_t oracle = 0;
};

struct VerifyReport {
  RegionSpec spec;
  Window window;
  std::string instance;          // "seed=7 prime=..." or a fixed name
  std::size_t compared = 0;
  std::size_t matched = 0;
  std::vector<CellMismatch> mismatches;
  std::vector<OracleCell> informational;   // InstanceDependent cells
  IntGrid oracle;                          // HF_V over the window
  int padding = 0;
  std::map<std::string, double> seconds;   // phase -> wall time

  bool ok() const { return mismatches.empty(); }
};

/// Compares every Known cell of hf_table(spec, window) with HF_V of `inst`.
/// The window must have a nonnegative lower corner. Throws ShapeMismatch or
/// NotCompleteIntersection when the instance does not fit the spec.
VerifyReport verify_formula_vs_oracle(const RegionSpec& spec, const Window& window, const oracle::Instance& inst,
                                      const std::string& descriptor);

struct GenericReport {
  RegionSpec spec;
  std::uint64_t prime = 0;
  std::optional<std::uint64_t> seed;   // empty for a supplied instance
  BigInt degree;
  std::int64_t bound = 0;
  std::vector<std::int64_t> profile_x;  // HF_V(a, 0), a = 0..bound
  std::vector<std::int64_t> profile_y;  // HF_V(0, b), b = 0..bound
  std::optional<std::int64_t> stable_x; // first a with HF_V(a, 0) = degree
  std::optional<std::int64_t> stable_y;
  std::size_t below_degree = 0;         // axis cells with HF_V < degree

  /// Both projections are injective on the points: both profiles reach the degree.
  bool generic() const { return stable_x.has_value() && stable_y.has_value(); }
};

/// Axis profiles of a random instance (dense forms, uniform coefficients).
/// Requires bound >= every coordinate of both guaranteed corners.
GenericReport generic_projection_experiment(const Shape& shape, Bidegree d, std::uint64_t prime, std::uint64_t seed,
                                            std::int64_t bound);

/// Same for a given instance of equal-degree forms.
GenericReport generic_projection_experiment(const RegionSpec& spec, const oracle::Instance& inst,
                                            std::int64_t bound);

struct DoublePrimeReport {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  IntGrid grid1;
  IntGrid grid2;
  std::vector<Bidegree> differing;
  std::string error;   // set when either oracle run failed

  bool identical() const { return error.empty() && differing.empty(); }
};

/// Reduces one integer coefficient stream modulo p1 and p2 and compares the
/// HF_V grids. Throws std::invalid_argument when p1 == p2 or either is not prime.
DoublePrimeReport double_prime_check(const oracle::IntegerInstance& integers, const Window& window, std::uint64_t p1,
                                     std::uint64_t p2);

/// Integer stream of random_integer_instance(spec.shape, spec.d, seed).
DoublePrimeReport double_prime_check(const RegionSpec& spec, const Window& window, std::uint64_t seed,
                                     std::uint64_t p1, std::uint64_t p2);

}  // namespace bihilb
