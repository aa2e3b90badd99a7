#pragma once

#include "mlq/rational.hpp"

namespace mlq {

// c_{p,q} assembled from four T(s,t) values by inclusion-exclusion, with
// T(s,0) = 0 and T(s,t) = 0 when s+t = n. The same index pattern serves
// both orders: pass (p,q) = (i,j) with T^< for i<j, and (j,i) with T^>
// for i>j. Coefficients are N = n+2s+t of each term's type.
template <typename TFun>
inline Rational assemble_pie(long long p, long long q, long long n, TFun&& T) {
  struct Term {
    long long s, t;
    int sign;
  };
  const Term terms[4] = {{p - 1, q - p, +1},
                         {p, q - p - 1, -1},
                         {p - 1, q - p + 1, -1},
                         {p, q - p, +1}};
  Rational acc;
  for (const auto& term : terms) {
    if (term.t <= 0 || term.s < 0 || term.s + term.t >= n) continue;
    Rational coeff(BigInt(n + 2 * term.s + term.t));
    Rational value = T(term.s, term.t);
    acc += (term.sign > 0 ? coeff * value : -(coeff * value));
  }
  return acc;
}

}  // namespace mlq
