#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mlq/bigint.hpp"
#include "mlq/combinatorics.hpp"
#include "mlq/partition.hpp"

namespace mlq {

// Number of standard Young tableaux of a straight shape, by the hook
// length formula f = n! / prod(hooks). Empty shape counts 1.
inline BigInt count_syt(const Partition& shape) {
  BigInt r = factorial(shape.weight());
  for (const auto& row : hook_lengths(shape))
    for (long long h : row) r = BigInt::div_exact(r, BigInt(h));
  return r;
}

// f_(a,b) = (a-b+1)/(a+1) * C(a+b, a), for a >= b >= 0.
inline BigInt count_syt_two_row(long long a, long long b) {
  if (b < 0 || a < b)
    throw std::invalid_argument("count_syt_two_row: need a >= b >= 0");
  return BigInt::div_exact(binomial(a + b, b) * BigInt(a - b + 1),
                           BigInt(a + 1));
}

// f_(a,b,c) for a >= b >= c >= 0, as the three-row product formula.
inline BigInt count_syt_three_row(long long a, long long b, long long c) {
  if (c < 0 || b < c || a < b)
    throw std::invalid_argument("count_syt_three_row: need a >= b >= c >= 0");
  BigInt r = multinomial(a + b + c, {a, b, c});
  r *= BigInt(a - c + 2) * BigInt(a - b + 1) * BigInt(b - c + 1);
  return BigInt::div_exact(r, BigInt(a + 2) * BigInt(a + 1) * BigInt(b + 1));
}

// Number of standard Young tableaux of a skew shape, by the determinant
// formula f = n! * det(1 / (outer_i - inner_j - i + j)!), with 1/k! = 0
// for k < 0. Each row is scaled by a common factorial so the elimination
// runs fraction-free over integers (Bareiss), then the scale is divided
// back out; everything stays exact.
inline BigInt count_syt_skew(const SkewShape& shape) {
  const std::size_t ell = shape.outer().rows();
  if (ell == 0) return BigInt(1);
  if (shape.cells() == 0) return BigInt(1);

  std::vector<long long> scale_arg(ell, 0);
  std::vector<std::vector<BigInt>> a(ell, std::vector<BigInt>(ell));
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      long long k = shape.outer().part(i) - shape.inner().part(j) -
                    static_cast<long long>(i) + static_cast<long long>(j);
      if (k > scale_arg[i]) scale_arg[i] = k;
    }
  }
  std::vector<BigInt> scale(ell);
  BigInt scale_product(1);
  for (std::size_t i = 0; i < ell; ++i) {
    scale[i] = factorial(scale_arg[i]);
    scale_product *= scale[i];
  }
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      long long k = shape.outer().part(i) - shape.inner().part(j) -
                    static_cast<long long>(i) + static_cast<long long>(j);
      if (k < 0) {
        a[i][j] = BigInt(0);  // 1/k! = 0 for negative k
      } else {
        // scale[i] / k! as a falling factorial, an exact integer
        BigInt v(1);
        for (long long x = k + 1; x <= scale_arg[i]; ++x) v *= BigInt(x);
        a[i][j] = v;
      }
    }
  }

  // Fraction-free elimination; det ends up in a[ell-1][ell-1].
  int det_sign = 1;
  BigInt prev_pivot(1);
  for (std::size_t k = 0; k + 1 < ell; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < ell && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == ell) return BigInt(0);
      std::swap(a[k], a[swap_row]);
      det_sign = -det_sign;
    }
    for (std::size_t i = k + 1; i < ell; ++i) {
      for (std::size_t j = k + 1; j < ell; ++j) {
        a[i][j] = BigInt::div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j],
                                    prev_pivot);
      }
      a[i][k] = BigInt(0);
    }
    prev_pivot = a[k][k];
  }
  BigInt det = a[ell - 1][ell - 1];
  if (det_sign < 0) det = -det;

  BigInt numerator = factorial(shape.cells()) * det;
  return BigInt::div_exact(numerator, scale_product);
}

namespace detail {
constexpr long long kBruteForceCellLimit = 16;
}

// Counts standard fillings of a skew shape by exhaustive backtracking:
// values 1..n are placed in increasing order, each into a cell whose left
// and upper neighbours (inside the shape) are already filled. Serves as
// the independent oracle for the hook length and determinant routes.
inline BigInt brute_force_syt(const SkewShape& shape) {
  const long long n = shape.cells();
  if (n > detail::kBruteForceCellLimit)
    throw std::invalid_argument("brute_force_syt: more than 16 cells");
  if (n == 0) return BigInt(1);

  struct Cell {
    int left = -1;  // index of the cell to the left, -1 if outside shape
    int up = -1;
  };
  std::vector<Cell> cells;
  std::vector<std::vector<int>> index(shape.outer().rows());
  for (std::size_t i = 0; i < shape.outer().rows(); ++i) {
    index[i].assign(static_cast<std::size_t>(shape.outer().part(i)), -1);
    for (long long j = shape.inner().part(i); j < shape.outer().part(i); ++j) {
      Cell c;
      if (shape.contains(i, j - 1)) c.left = index[i][static_cast<std::size_t>(j - 1)];
      if (i > 0 && shape.contains(i - 1, j))
        c.up = index[i - 1][static_cast<std::size_t>(j)];
      index[i][static_cast<std::size_t>(j)] = static_cast<int>(cells.size());
      cells.push_back(c);
    }
  }

  long long count = 0;
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // Depth-first over placements; `filled` is the set of occupied cells.
  auto ready = [&](std::uint32_t filled, int c) {
    const Cell& cell = cells[static_cast<std::size_t>(c)];
    if (filled & (1u << c)) return false;
    if (cell.left >= 0 && !(filled & (1u << cell.left))) return false;
    if (cell.up >= 0 && !(filled & (1u << cell.up))) return false;
    return true;
  };
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    std::uint32_t filled = stack.back();
    stack.pop_back();
    if (filled == full) {
      ++count;
      continue;
    }
    for (int c = 0; c < n; ++c)
      if (ready(filled, c)) stack.push_back(filled | (1u << c));
  }
  return BigInt(count);
}

// --- Lenient evaluators for printed formulas ------------------------------
//
// The closed forms and triple sums are written so that out-of-domain terms
// vanish. These helpers return 0 for any argument list that does not
// describe a genuine (skew) shape instead of throwing, so sums can be
// evaluated exactly as printed.

inline BigInt syt_two_row_or_zero(long long a, long long b) {
  if (b < 0 || a < b) return BigInt(0);
  return count_syt_two_row(a, b);
}

inline BigInt syt_three_row_or_zero(long long a, long long b, long long c) {
  if (c < 0 || b < c || a < b) return BigInt(0);
  return count_syt_three_row(a, b, c);
}

inline bool valid_partition_parts(const std::vector<long long>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

inline BigInt syt_skew_or_zero(const std::vector<long long>& outer,
                               const std::vector<long long>& inner) {
  if (!valid_partition_parts(outer) || !valid_partition_parts(inner))
    return BigInt(0);
  Partition lam(outer), mu(inner);
  if (!mu.contained_in(lam)) return BigInt(0);
  return count_syt_skew(SkewShape(std::move(lam), std::move(mu)));
}

}  // namespace mlq
