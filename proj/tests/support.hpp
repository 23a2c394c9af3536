#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the plain data types, so agreement is meaningful.

#include <cstdint>
#include <vector>

#include "bihilb/oracle/instance.hpp"
#include "bihilb/types.hpp"

namespace testsupport {

using bihilb::BigInt;
using bihilb::Bidegree;
using bihilb::Shape;
using u64 = std::uint64_t;

// Pascal's triangle, 0 outside 0 <= k <= t.
inline BigInt pascal(std::int64_t t, std::int64_t k) {
  if (t < 0 || k < 0 || k > t) return 0;
  std::vector<BigInt> row{1};
  for (std::int64_t i = 1; i <= t; ++i) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row.swap(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// All exponent vectors of length len summing to total.
inline void compositions(int len, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= total; ++e) {
    cur.push_back(e);
    compositions(len, total - e, cur, out);
    cur.pop_back();
  }
}

struct Mono {
  std::vector<int> x, y;
  bool operator==(const Mono&) const = default;
};

inline std::vector<Mono> monomials(const Shape& s, Bidegree mu) {
  std::vector<Mono> out;
  if (mu.a < 0 || mu.b < 0) return out;
  std::vector<std::vector<int>> xs, ys;
  std::vector<int> cur;
  compositions(s.n + 1, static_cast<int>(mu.a), cur, xs);
  compositions(s.m + 1, static_cast<int>(mu.b), cur, ys);
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back({x, y});
  return out;
}

inline std::size_t find(const std::vector<Mono>& basis, const Mono& m) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == m) return i;
  return basis.size();
}

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

// Textbook Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<u64>> rows, u64 p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const u64 inv = powmod(rows[rank][c], p - 2, p);
    for (auto& v : rows[rank]) v = mulmod(v, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const u64 f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = (rows[r][k] + p - mulmod(f, rows[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

// dim (S/I)_mu via the Macaulay matrix of all products monomial * generator.
inline std::size_t naive_hf_si(const bihilb::oracle::Instance& inst, Bidegree mu) {
  const u64 p = inst.field.modulus();
  const auto target = monomials(inst.shape, mu);
  std::vector<std::vector<u64>> rows;
  for (const auto& f : inst.forms) {
    for (const auto& g : monomials(inst.shape, mu - f.degree)) {
      std::vector<u64> row(target.size(), 0);
      for (const auto& t : f.terms) {
        Mono prod = g;
        for (std::size_t i = 0; i < prod.x.size(); ++i) prod.x[i] += t.mono.x[i];
        for (std::size_t j = 0; j < prod.y.size(); ++j) prod.y[j] += t.mono.y[j];
        auto& cell = row[find(target, prod)];
        cell = (cell + t.coeff) % p;
      }
      rows.push_back(std::move(row));
    }
  }
  return target.size() - rank_mod(std::move(rows), p);
}

}  // namespace testsupport
