#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "weyl/error.hpp"

namespace weyl {

using i64 = std::int64_t;
__extension__ using i128 = __int128;

namespace arith {

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

inline i64 pow(i64 base, unsigned exp) {
  i64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

inline i64 binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = k > n - k ? n - k : k;
  i64 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = mul(r, static_cast<i64>(n - k + i)) / static_cast<i64>(i);
  return r;
}

/// Representative of a modulo m in {0, ..., m-1}.
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<i128>(mod(a, m)) * mod(b, m)) % m);
}

inline i64 powmod(i64 base, unsigned exp, i64 m) {
  i64 r = mod(1, m);
  base = mod(base, m);
  while (exp) {
    if (exp & 1u) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1u;
  }
  return r;
}

}  // namespace arith

/// Residue arithmetic in Z/M, used where integer coefficients are only needed
/// up to the order of the fixed root of unity.
struct Residue {
  i64 value = 0;
  i64 modulus = 1;

  Residue() = default;
  Residue(i64 v, i64 m) : value(arith::mod(v, m)), modulus(m) {}

  friend Residue operator+(Residue a, Residue b) { return {a.value + b.value, a.modulus}; }
  friend Residue operator-(Residue a, Residue b) { return {a.value - b.value, a.modulus}; }
  friend Residue operator*(Residue a, Residue b) {
    return {arith::mulmod(a.value, b.value, a.modulus), a.modulus};
  }
  friend bool operator==(Residue a, Residue b) { return a.value == b.value; }
};

}  // namespace weyl
