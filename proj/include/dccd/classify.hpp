#pragma once

#include <map>

#include "bounds.hpp"
#include "design.hpp"

namespace dccd {

/**
 * Strength-2 classification. "Economical" means the pair coverage is
 * complete and b meets the (ceiled) counting bound for the design's
 * uniform change number; "tight" additionally requires the bound's
 * division to be exact and every pair to be covered exactly once.
 */
struct classification {
  std::map<int, bool> is_m_change;     // m -> uniform m-change over all gaps
  std::optional<int> uniform_change;   // the m that holds, if any (b > 1)
  bool covers_all = false;
  bool economical = false;
  bool tight = false;
  std::uint64_t bound = 0;             // ceiled bound used for the economy test
  std::uint64_t covered = 0;
  std::uint64_t pair_total = 0;
};

inline classification classify(const design& d)
{
  classification c;
  for (int m = 1; m <= d.k; ++m)
    c.is_m_change[m] = verify_m_change(d, m).ok;

  if (d.b() == 1) {
    c.uniform_change = 2; // no gaps; classify against the double change bound
  } else {
    for (int m = 1; m <= d.k; ++m)
      if (c.is_m_change[m]) { c.uniform_change = m; break; }
  }

  auto ledger = coverage(d, 2);
  c.pair_total = ledger.total_tsets();
  c.covered = ledger.covered_count();
  c.covers_all = ledger.all_covered();

  if (!c.uniform_change) return c; // mixed change sizes: no bound applies

  bound_query q{static_cast<unsigned>(d.v), static_cast<unsigned>(d.k), 2};
  unsigned m = static_cast<unsigned>(*c.uniform_change);
  bool exact;
  if (d.circular) {
    c.bound = lower_bound_circular(q, m);
    exact = circular_bound_exact(q, m);
  } else {
    c.bound = lower_bound_linear(q, m);
    exact = linear_bound_exact(q, m);
  }
  c.economical = c.covers_all && static_cast<std::uint64_t>(d.b()) == c.bound;
  c.tight = c.economical && exact && ledger.exactly_once();
  return c;
}

} // namespace dccd
