#pragma once

#include <cstdint>
#include <limits>

#include "errors.hpp"

namespace dccd {

/* All bound arithmetic is exact and unsigned; a result that would not fit
   in 64 bits throws instead of wrapping. */

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw parameter_error("integer overflow in bound arithmetic");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw parameter_error("integer overflow in bound arithmetic");
  return r;
}

/* C(n, r) computed exactly by the factor-by-factor scheme; never divides
   a non-multiple. */
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r)
{
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) is divisible by i at every step
    std::uint64_t num = checked_mul(acc, n - r + i);
    acc = num / i;
  }
  return acc;
}

/* Ceiling division on non-negative integers. */
inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t d)
{
  if (d == 0) throw parameter_error("ceil_div: zero denominator");
  return (a + d - 1) / d;
}

struct bound_query {
  unsigned v = 0;
  unsigned k = 0;
  unsigned t = 2;
};

inline void validate(const bound_query& q)
{
  if (q.t < 1) throw parameter_error("bound query requires t >= 1");
  if (q.t > q.k || q.k > q.v)
    throw parameter_error("bound query requires t <= k <= v");
}

/* Number of t-sets a block can cover when exactly m of its k elements are
   fresh: sum over i >= 1 of C(m, i) * C(k - m, t - i). */
inline std::uint64_t change_denominator(unsigned k, unsigned t, unsigned m)
{
  std::uint64_t d = 0;
  for (unsigned i = 1; i <= t && i <= m; ++i)
    d = checked_add(d, checked_mul(binomial(m, i), binomial(k - m, t - i)));
  return d;
}

/* Minimum block count of a linear double change covering design:
   ceil((C(v,t) - C(k,t)) / (2 C(k-2,t-1) + C(k-2,t-2))) + 1.
   The numerator clamps at 0 so the degenerate v = k case yields 1. */
inline std::uint64_t lower_bound_linear(const bound_query& q, unsigned m = 2)
{
  validate(q);
  std::uint64_t all = binomial(q.v, q.t);
  std::uint64_t first = binomial(q.k, q.t);
  std::uint64_t num = all > first ? all - first : 0;
  std::uint64_t den = change_denominator(q.k, q.t, m);
  if (den == 0) throw parameter_error("bound denominator is zero");
  return ceil_div(num, den) + 1;
}

/* Circular variant: ceil(C(v,t) / (2 C(k-2,t-1) + C(k-2,t-2))). */
inline std::uint64_t lower_bound_circular(const bound_query& q, unsigned m = 2)
{
  validate(q);
  std::uint64_t den = change_denominator(q.k, q.t, m);
  if (den == 0) throw parameter_error("bound denominator is zero");
  return ceil_div(binomial(q.v, q.t), den);
}

/* True when the ceiling in the corresponding bound is exact, i.e. the
   counting argument admits an exactly-once covering. */
inline bool linear_bound_exact(const bound_query& q, unsigned m = 2)
{
  validate(q);
  std::uint64_t all = binomial(q.v, q.t);
  std::uint64_t first = binomial(q.k, q.t);
  std::uint64_t num = all > first ? all - first : 0;
  return num % change_denominator(q.k, q.t, m) == 0;
}

inline bool circular_bound_exact(const bound_query& q, unsigned m = 2)
{
  validate(q);
  return binomial(q.v, q.t) % change_denominator(q.k, q.t, m) == 0;
}

} // namespace dccd
