#include "bihilb/fp/field.hpp"

#include <stdexcept>
#include <string>

namespace bihilb::fp {

namespace {

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n) {
  u64 result = 1 % n;
  a %= n;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p < 2 || p >= kMaxModulus) {
    throw std::invalid_argument("prime field modulus " + std::to_string(p) + " outside [2, 2^62)");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is composite");
  }
  two64_ = static_cast<u64>((static_cast<u128>(1) << 64) % p_);
}

u64 PrimeField::pow(u64 a, u64 e) const { return powmod(a, e, p_); }

u64 PrimeField::inv(u64 a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

u64 PrimeField::from_int(std::int64_t v) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<u64>(r);
}

}  // namespace bihilb::fp
