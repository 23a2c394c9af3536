#pragma once

#include <cstddef>
#include <vector>

#include "bihilb/types.hpp"

namespace bihilb::oracle {

/// x_0^{x[0]} ... x_n^{x[n]} y_0^{y[0]} ... y_m^{y[m]}.
struct Monomial {
  std::vector<int> x;
  std::vector<int> y;

  Bidegree bidegree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Multiplies two monomials of the same shape.
Monomial operator*(const Monomial& u, const Monomial& v);

/// All monomials of bidegree mu: x-part in lex order (x_0 > x_1 > ...), then
/// y-part in lex order within each x-part. Empty for negative coordinates.
std::vector<Monomial> monomial_basis(const Shape& shape, Bidegree mu);

/// Number of monomials of bidegree mu as a machine integer.
std::size_t basis_size(const Shape& shape, Bidegree mu);

/// Position of `mono` in monomial_basis(shape, mono.bidegree()).
std::size_t monomial_index(const Shape& shape, const Monomial& mono);

/// Lex-before in the basis order above (used to sort terms canonically).
bool basis_order_less(const Monomial& u, const Monomial& v);

}  // namespace bihilb::oracle
