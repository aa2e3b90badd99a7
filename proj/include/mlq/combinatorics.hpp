#pragma once

#include <span>
#include <vector>

#include "mlq/bigint.hpp"

namespace mlq {

// n!, for n >= 0. Negative arguments are the caller's problem; the sum
// conventions below are handled by binomial/multinomial returning 0.
inline BigInt factorial(long long n) {
  BigInt r(1);
  for (long long i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

// C(n, k) with the convention that out-of-range indices give 0:
// k < 0, k > n, or n < 0 all yield 0. Closed forms in this codebase lean
// on vanishing binomials instead of explicit case splits.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long long i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r = BigInt::div_exact(r, BigInt(i + 1));
  }
  return r;
}

// n! / (parts[0]! * ... * parts[m-1]!) when every part is >= 0 and the
// parts sum to n; 0 otherwise.
inline BigInt multinomial(long long n, std::span<const long long> parts) {
  if (n < 0) return BigInt(0);
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) return BigInt(0);
    sum += p;
  }
  if (sum != n) return BigInt(0);
  // Product of nested binomials avoids one big factorial division.
  BigInt r(1);
  long long rest = n;
  for (long long p : parts) {
    r *= binomial(rest, p);
    rest -= p;
  }
  return r;
}

inline BigInt multinomial(long long n, std::initializer_list<long long> parts) {
  return multinomial(n, std::span<const long long>(parts.begin(), parts.size()));
}

inline BigInt multinomial(long long n, const std::vector<long long>& parts) {
  return multinomial(n, std::span<const long long>(parts.data(), parts.size()));
}

}  // namespace mlq
