#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bihilb/fp/field.hpp"
#include "bihilb/oracle/monomial.hpp"
#include "bihilb/types.hpp"

namespace bihilb::oracle {

using fp::PrimeField;
using fp::u64;

struct Term {
  Monomial mono;
  u64 coeff = 0;  // in (0, p)
  friend bool operator==(const Term&, const Term&) = default;
};

/// A bihomogeneous form: terms sorted in basis order, pairwise distinct,
/// nonzero coefficients, all of the declared bidegree.
struct Form {
  Bidegree degree;
  std::vector<Term> terms;

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  /// Throws std::invalid_argument if a term has the wrong bidegree.
  static Form make(Bidegree degree, std::vector<Term> terms, const PrimeField& field);

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Form&, const Form&) = default;
};

struct Instance {
  Shape shape;
  PrimeField field{2};
  std::vector<Form> forms;

  DegreeList degrees() const;
  friend bool operator==(const Instance& u, const Instance& v) {
    return u.shape == v.shape && u.field == v.field && u.forms == v.forms;
  }
};

/// Integer-coefficient forms, reduced into any prime field on demand. The
/// same integer stream reduced modulo two primes gives comparable instances.
struct IntegerInstance {
  Shape shape;
  std::vector<Bidegree> degrees;
  std::vector<std::vector<std::pair<Monomial, std::int64_t>>> forms;

  Instance reduce(const PrimeField& field) const;
};

/// Parses the canonical instance JSON. Throws ParseError (with byte offset)
/// on malformed input and ShapeMismatch on exponent vectors of wrong length.
Instance parse_instance(std::string_view text);

/// Canonical compact JSON; terms in basis order, keys in the order
/// n, m, prime, forms / bidegree, terms / x, y, c.
std::string serialize_instance(const Instance& inst);

/// n+m dense forms of bidegree d with coefficients uniform in [0, p),
/// drawn in basis order from CounterRng(seed).
Instance random_instance(const Shape& shape, Bidegree d, const PrimeField& field, std::uint64_t seed);

/// Dense forms with one bidegree per entry of `degrees`.
Instance random_instance(const Shape& shape, const DegreeList& degrees, const PrimeField& field,
                         std::uint64_t seed);

/// Dense integer forms with coefficients uniform in [-bound, bound].
IntegerInstance random_integer_instance(const Shape& shape, Bidegree d, std::uint64_t seed,
                                        std::int64_t bound = 1000);

/// (x0^2 y0^2, x1^2 y1^2, x2^2 y2^2, (x0+x1+x2)^2 (y0+y1+y2)^2) in P^2 x P^2:
/// a non-generic complete intersection of 96 points whose projections are
/// not injective.
IntegerInstance diagonal_example_integers();
Instance diagonal_example(const PrimeField& field);

}  // namespace bihilb::oracle
