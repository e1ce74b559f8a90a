#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dccd {

using edge = std::pair<int, int>; // smaller endpoint first

/**
 * Partition of the edges of K_n (n even) into n-1 perfect matchings.
 * Factors are ordered by rotation index, edges within a factor sorted
 * lexicographically, so the object is fully canonical.
 */
struct one_factorization {
  int n = 0;
  std::vector<std::vector<edge>> factors;
};

/* Fix vertex n-1 at the hub and rotate the others: factor j pairs the hub
   with j and matches (j - i) with (j + i) mod (n - 1). */
inline one_factorization circle_method(int n)
{
  if (n < 2 || n % 2 != 0) throw parameter_error("circle_method requires even n >= 2");
  one_factorization f;
  f.n = n;
  const int ring = n - 1;
  auto wrap = [ring](int x) { return ((x % ring) + ring) % ring; };
  for (int j = 0; j < ring; ++j) {
    std::vector<edge> factor;
    factor.push_back({j, n - 1});
    for (int i = 1; i <= n / 2 - 1; ++i) {
      int a = wrap(j - i);
      int b = wrap(j + i);
      factor.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(factor.begin(), factor.end());
    f.factors.push_back(std::move(factor));
  }
  return f;
}

struct factorization_report {
  bool ok = true;
  int factor_index = -1;   // first offending factor, when !ok
  std::string detail;
};

/* Every factor must be a perfect matching; across factors every edge of
   K_n must appear exactly once. Reports the first violation found. */
inline factorization_report verify_factorization(const one_factorization& f)
{
  if (f.n < 2 || f.n % 2 != 0) return {false, -1, "vertex count must be even and >= 2"};
  std::vector<std::vector<char>> seen(f.n, std::vector<char>(f.n, 0));
  for (std::size_t j = 0; j < f.factors.size(); ++j) {
    std::vector<char> matched(f.n, 0);
    for (auto [a, b] : f.factors[j]) {
      if (a < 0 || b >= f.n || a >= b)
        return {false, static_cast<int>(j), "malformed edge"};
      if (matched[a]) return {false, static_cast<int>(j), "vertex " + std::to_string(a) + " matched twice"};
      if (matched[b]) return {false, static_cast<int>(j), "vertex " + std::to_string(b) + " matched twice"};
      matched[a] = matched[b] = 1;
      if (seen[a][b]) return {false, static_cast<int>(j), "duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}"};
      seen[a][b] = 1;
    }
    for (int vtx = 0; vtx < f.n; ++vtx)
      if (!matched[vtx])
        return {false, static_cast<int>(j), "vertex " + std::to_string(vtx) + " unmatched"};
  }
  for (int a = 0; a < f.n; ++a)
    for (int b = a + 1; b < f.n; ++b)
      if (!seen[a][b])
        return {false, -1, "edge {" + std::to_string(a) + "," + std::to_string(b) + "} missing"};
  return {};
}

} // namespace dccd
