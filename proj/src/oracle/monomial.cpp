#include "bihilb/oracle/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace bihilb::oracle {

namespace {

std::size_t small_binom(std::int64_t t, std::int64_t k) {
  if (k < 0 || t < k) return 0;
  k = std::min(k, t - k);
  std::size_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(t - k + i) / static_cast<std::size_t>(i);
  return r;
}

// Exponent vectors of length `vars` and total degree `deg`, lex-descending.
void exponents(int vars, int deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const auto pos = cur.size();
  if (static_cast<int>(pos) == vars - 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur.push_back(e);
    exponents(vars, deg - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> exponents(int vars, std::int64_t deg) {
  std::vector<std::vector<int>> out;
  if (deg < 0) return out;
  std::vector<int> cur;
  exponents(vars, static_cast<int>(deg), cur, out);
  return out;
}

// Rank of an exponent vector among lex-descending vectors of its degree.
std::size_t exponent_rank(const std::vector<int>& e) {
  std::int64_t rest = std::accumulate(e.begin(), e.end(), std::int64_t{0});
  std::size_t idx = 0;
  const auto k = static_cast<std::int64_t>(e.size());
  for (std::int64_t i = 0; i + 1 < k; ++i) {
    const std::int64_t later = k - i - 1;  // variables after position i
    // vectors with a larger exponent at i: sum over t > e_i of C(rest - t + later - 1, later - 1)
    idx += small_binom(rest - e[i] - 1 + later, later);
    rest -= e[i];
  }
  return idx;
}

}  // namespace

Bidegree Monomial::bidegree() const {
  return {std::accumulate(x.begin(), x.end(), std::int64_t{0}),
          std::accumulate(y.begin(), y.end(), std::int64_t{0})};
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  if (u.x.size() != v.x.size() || u.y.size() != v.y.size()) {
    throw std::invalid_argument("monomials of different shapes");
  }
  Monomial w = u;
  for (std::size_t i = 0; i < w.x.size(); ++i) w.x[i] += v.x[i];
  for (std::size_t j = 0; j < w.y.size(); ++j) w.y[j] += v.y[j];
  return w;
}

std::vector<Monomial> monomial_basis(const Shape& shape, Bidegree mu) {
  std::vector<Monomial> out;
  if (!mu.nonnegative()) return out;
  const auto xs = exponents(shape.n + 1, mu.a);
  const auto ys = exponents(shape.m + 1, mu.b);
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    for (const auto& y : ys) out.push_back(Monomial{x, y});
  }
  return out;
}

std::size_t basis_size(const Shape& shape, Bidegree mu) {
  if (!mu.nonnegative()) return 0;
  return small_binom(shape.n + mu.a, shape.n) * small_binom(shape.m + mu.b, shape.m);
}

std::size_t monomial_index(const Shape& shape, const Monomial& mono) {
  const Bidegree mu = mono.bidegree();
  return exponent_rank(mono.x) * small_binom(shape.m + mu.b, shape.m) + exponent_rank(mono.y);
}

bool basis_order_less(const Monomial& u, const Monomial& v) {
  // Lex-descending exponent order puts larger vectors first.
  if (u.x != v.x) return u.x > v.x;
  return u.y > v.y;
}

}  // namespace bihilb::oracle
