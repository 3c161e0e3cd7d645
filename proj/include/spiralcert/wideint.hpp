#pragma once

#include <cstdint>

// Minimal 256-bit unsigned arithmetic: just enough for the fixed-point
// phase oracle (integer square root of n << 192 and one 128x128 product).

namespace spiralcert {

using u128 = unsigned __int128;

struct U256 {
  // Little-endian 64-bit limbs: value = sum w[i] * 2^(64 i).
  std::uint64_t w[4] = {0, 0, 0, 0};
};

inline bool u256_gte(const U256& a, const U256& b) {
  for (int i = 3; i >= 0; --i) {
    if (a.w[i] != b.w[i]) return a.w[i] > b.w[i];
  }
  return true;
}

inline U256 u256_sub(const U256& a, const U256& b) {
  U256 r;
  unsigned __int128 borrow = 0;
  for (int i = 0; i < 4; ++i) {
    unsigned __int128 d = static_cast<unsigned __int128>(a.w[i]) - b.w[i] - borrow;
    r.w[i] = static_cast<std::uint64_t>(d);
    borrow = (d >> 64) & 1;  // wraps to all-ones on underflow
  }
  return r;
}

inline U256 u256_add(const U256& a, const U256& b) {
  U256 r;
  unsigned __int128 carry = 0;
  for (int i = 0; i < 4; ++i) {
    unsigned __int128 s = static_cast<unsigned __int128>(a.w[i]) + b.w[i] + carry;
    r.w[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  return r;
}

// a << k for k in [0, 63].
inline U256 u256_shl_small(const U256& a, unsigned k) {
  if (k == 0) return a;
  U256 r;
  for (int i = 3; i > 0; --i) {
    r.w[i] = (a.w[i] << k) | (a.w[i - 1] >> (64 - k));
  }
  r.w[0] = a.w[0] << k;
  return r;
}

inline U256 u256_from_u128(u128 v) {
  U256 r;
  r.w[0] = static_cast<std::uint64_t>(v);
  r.w[1] = static_cast<std::uint64_t>(v >> 64);
  return r;
}

inline u128 u256_low128(const U256& a) {
  return (static_cast<u128>(a.w[1]) << 64) | a.w[0];
}

// Full 128x128 -> 256 product.
inline U256 mul_u128(u128 a, u128 b) {
  std::uint64_t a0 = static_cast<std::uint64_t>(a), a1 = static_cast<std::uint64_t>(a >> 64);
  std::uint64_t b0 = static_cast<std::uint64_t>(b), b1 = static_cast<std::uint64_t>(b >> 64);
  u128 p00 = static_cast<u128>(a0) * b0;
  u128 p01 = static_cast<u128>(a0) * b1;
  u128 p10 = static_cast<u128>(a1) * b0;
  u128 p11 = static_cast<u128>(a1) * b1;

  U256 r = u256_from_u128(p00);
  // cross terms shifted up one limb
  U256 m1{};
  m1.w[1] = static_cast<std::uint64_t>(p01);
  m1.w[2] = static_cast<std::uint64_t>(p01 >> 64);
  U256 m2{};
  m2.w[1] = static_cast<std::uint64_t>(p10);
  m2.w[2] = static_cast<std::uint64_t>(p10 >> 64);
  U256 hi{};
  hi.w[2] = static_cast<std::uint64_t>(p11);
  hi.w[3] = static_cast<std::uint64_t>(p11 >> 64);
  return u256_add(u256_add(r, m1), u256_add(m2, hi));
}

// floor(sqrt(x)) for a 256-bit radicand, by the classic restoring
// digit-pair method (128 iterations, exact).
inline u128 isqrt_u256(U256 x) {
  U256 rem{};
  U256 root{};
  for (int it = 0; it < 128; ++it) {
    std::uint64_t top2 = x.w[3] >> 62;
    x = u256_shl_small(x, 2);
    rem = u256_shl_small(rem, 2);
    rem.w[0] |= top2;
    root = u256_shl_small(root, 1);
    U256 trial = u256_shl_small(root, 1);
    trial.w[0] |= 1;  // candidate increment: (2 root + 1)
    if (u256_gte(rem, trial)) {
      rem = u256_sub(rem, trial);
      root.w[0] |= 1;
    }
  }
  return u256_low128(root);
}

}  // namespace spiralcert
