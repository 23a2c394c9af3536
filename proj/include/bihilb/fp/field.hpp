#pragma once

#include <cstdint>

namespace bihilb::fp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Z/p for a word-sized prime 2 <= p < 2^62. Elements are residues in [0, p).
class PrimeField {
 public:
  static constexpr u64 kMaxModulus = u64{1} << 62;

  /// Throws std::invalid_argument when p is composite or out of range.
  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }

  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
  u64 pow(u64 a, u64 e) const;
  /// Throws std::domain_error for 0.
  u64 inv(u64 a) const;
  u64 from_int(std::int64_t v) const;

  /// Shoup precomputation for repeated multiplication by a fixed c < p.
  u64 precon(u64 c) const { return static_cast<u64>((static_cast<u128>(c) << 64) / p_); }
  /// c * x mod p using the precomputed quotient cp = precon(c); x < p.
  u64 mul_precon(u64 c, u64 cp, u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(cp) * x) >> 64);
    u64 r = c * x - q * p_;
    return r >= p_ ? r - p_ : r;
  }

  /// 2^64 mod p, used to fold 128-bit accumulators.
  u64 two64() const { return two64_; }
  u64 reduce128(u128 v) const { return static_cast<u64>(v % p_); }

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  u64 p_;
  u64 two64_;
};

}  // namespace bihilb::fp
