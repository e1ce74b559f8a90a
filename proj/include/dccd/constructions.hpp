#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "classify.hpp"
#include "design.hpp"

namespace dccd {

/* -------------------------------------------------------------------------
   Consecutive-block single change ring and the two derived double change
   constructions (point doubling, point adjunction).
   ------------------------------------------------------------------------- */

/* Circular single change design over Z_{2k'-1}: block i is the window
   {i, i+1, ..., i+k'-1} mod v. Every element is introduced exactly once. */
inline design csccd_consecutive(int k_prime)
{
  if (k_prime < 2) throw parameter_error("csccd_consecutive requires k' >= 2");
  const int v = 2 * k_prime - 1;
  std::vector<block> blocks(v);
  for (int i = 0; i < v; ++i) {
    block b(k_prime);
    for (int j = 0; j < k_prime; ++j) b[j] = (i + j) % v;
    blocks[i] = std::move(b);
  }
  return design(v, k_prime, true, std::move(blocks));
}

/* Replace every point x with the pair 2x, 2x+1. A single change ring on
   v points becomes a double change ring on 2v points with doubled block
   size; single introductions become double introductions, so tightness
   carries over. */
inline design double_points(const design& s)
{
  if (!s.circular) throw structural_error("double_points requires a circular design");
  if (!verify_m_change(s, 1).ok)
    throw structural_error("double_points requires a single change design");
  std::vector<block> blocks;
  blocks.reserve(s.blocks.size());
  for (const auto& src : s.blocks) {
    block b;
    b.reserve(2 * src.size());
    for (int x : src) {
      b.push_back(2 * x);
      b.push_back(2 * x + 1);
    }
    blocks.push_back(std::move(b));
  }
  return design(2 * s.v, 2 * s.k, true, std::move(blocks));
}

/* Add one new point (labeled v) to every block of a tight circular double
   change design with v = 2k-2 and b = k-1, k even. The new point is never
   introduced, so it pairs once with each old point exactly where that
   point is introduced. */
inline design adjoin_point(const design& d)
{
  if (!d.circular) throw structural_error("adjoin_point requires a circular design");
  if (d.k % 2 != 0) throw structural_error("adjoin_point requires even block size");
  if (d.v != 2 * d.k - 2 || d.b() != d.k - 1)
    throw structural_error("adjoin_point requires v = 2k-2 and b = k-1");
  if (!classify(d).tight) throw structural_error("adjoin_point requires a tight design");
  std::vector<block> blocks = d.blocks;
  for (auto& b : blocks) b.push_back(d.v);
  return design(d.v + 1, d.k + 1, true, std::move(blocks));
}

/* -------------------------------------------------------------------------
   Difference families.
   ------------------------------------------------------------------------- */

/**
 * c base blocks over Z_v whose +1 development is a circular double change
 * design: consecutive base blocks (the last wrapping to the first
 * incremented by one) share exactly k-2 points, and the pair differences
 * contributed by each block's two fresh elements sweep out Z_v \ {0}.
 */
struct base_block_family {
  int v = 0;
  int k = 0;
  std::vector<block> base_blocks;

  int c() const { return static_cast<int>(base_blocks.size()); }
};

/* The five catalogued families. Every block is A = {0..k-3} plus two
   elements; written below as the multipliers (p, q) of the two extras
   p(k-2)+dp and q(k-2)+dq. */
inline base_block_family base_family(int k, int c)
{
  if (k < 3) throw parameter_error("base_family requires k >= 3");
  if (c < 1 || c > 5)
    throw parameter_error("base_family supports 1 <= c <= 5 (the 61-point family is separate)");

  struct extra {
    int p, dp, q, dq;
  };
  static const std::vector<std::vector<extra>> rows = {
      {{1, 0, 2, 1}},
      {{2, 0, 5, 2}, {1, 0, 3, 1}},
      {{2, 0, 7, 3}, {3, 1, 5, 2}, {1, 0, 4, 2}},
      {{2, 0, 8, 4}, {3, 1, 5, 2}, {4, 2, 7, 4}, {1, 0, 6, 3}},
      {{2, 0, 6, 3}, {3, 0, 9, 4}, {4, 2, 7, 4}, {5, 3, 8, 4}, {1, 0, 10, 5}},
  };

  base_block_family fam;
  fam.k = k;
  fam.v = c * (4 * k - 6) + 1;
  const int u = k - 2;
  for (const auto& e : rows[c - 1]) {
    block b(k - 2);
    std::iota(b.begin(), b.end(), 0); // A = {0, ..., k-3}
    b.push_back(e.p * u + e.dp);
    b.push_back(e.q * u + e.dq);
    std::sort(b.begin(), b.end());
    fam.base_blocks.push_back(std::move(b));
  }
  return fam;
}

/* The one catalogued family outside the c <= 5 pattern: six base blocks
   over Z_61 whose development is a tight 366-block design. */
inline base_block_family base_family_61()
{
  base_block_family fam;
  fam.v = 61;
  fam.k = 4;
  fam.base_blocks = {
      {0, 1, 4, 19}, {0, 1, 6, 22}, {0, 1, 8, 25},
      {0, 1, 10, 48}, {0, 1, 12, 32}, {0, 1, 2, 28},
  };
  return fam;
}

struct family_report {
  bool ok = true;
  std::string detail;
};

/* Checks the family invariants directly: block shape, the k-2 sized seams
   (cyclically, last against first + 1), and that the covered differences
   hit every nonzero residue exactly once. */
inline family_report verify_base_family(const base_block_family& f)
{
  const int v = f.v;
  const int k = f.k;
  if (f.base_blocks.empty()) return {false, "family has no base blocks"};
  for (const auto& b : f.base_blocks) {
    if (static_cast<int>(b.size()) != k) return {false, "base block of wrong size"};
    for (int x : b)
      if (x < 0 || x >= v) return {false, "base block element outside Z_v"};
  }

  auto shift = [v](const block& b, int s) {
    block out;
    out.reserve(b.size());
    for (int x : b) out.push_back((x + s) % v);
    std::sort(out.begin(), out.end());
    return out;
  };

  const int c = f.c();
  for (int j = 0; j < c; ++j) {
    const block& cur = f.base_blocks[j];
    block nxt = (j + 1 < c) ? f.base_blocks[j + 1] : shift(f.base_blocks[0], 1);
    int got = intersection_size(cur, nxt);
    if (got != k - 2)
      return {false, "seam after base block " + std::to_string(j + 1) + " has intersection size " +
                         std::to_string(got)};
  }

  // Differences from the pairs each block covers: pairs containing at
  // least one element introduced there (the two points absent from the
  // predecessor).
  std::vector<int> diff_count(v, 0);
  for (int j = 0; j < c; ++j) {
    const block& cur = f.base_blocks[j];
    block prev = (j > 0) ? f.base_blocks[j - 1] : shift(f.base_blocks[c - 1], -1 + v);
    block intro = set_difference(cur, prev);
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t bidx = a + 1; bidx < cur.size(); ++bidx) {
        int x = cur[a], y = cur[bidx];
        bool fresh = std::binary_search(intro.begin(), intro.end(), x) ||
                     std::binary_search(intro.begin(), intro.end(), y);
        if (!fresh) continue;
        int dpos = ((y - x) % v + v) % v;
        ++diff_count[dpos];
        ++diff_count[v - dpos];
      }
  }
  for (int dpos = 1; dpos < v; ++dpos) {
    if (diff_count[dpos] == 0)
      return {false, "difference " + std::to_string(dpos) + " is not covered"};
    if (diff_count[dpos] > 1)
      return {false, "difference " + std::to_string(dpos) + " is covered " +
                         std::to_string(diff_count[dpos]) + " times"};
  }
  return {};
}

/* Develop the family through Z_v: round i contributes the c blocks
   base_j + i, rounds in order i = 0..v-1, so b = c * v. */
inline design develop(const base_block_family& f)
{
  auto rep = verify_base_family(f);
  if (!rep.ok) throw structural_error("base family invalid: " + rep.detail);
  std::vector<block> blocks;
  blocks.reserve(static_cast<std::size_t>(f.v) * f.c());
  for (int i = 0; i < f.v; ++i)
    for (const auto& base : f.base_blocks) {
      block b;
      b.reserve(base.size());
      for (int x : base) b.push_back((x + i) % f.v);
      std::sort(b.begin(), b.end());
      blocks.push_back(std::move(b));
    }
  return design(f.v, f.k, true, std::move(blocks));
}

/* -------------------------------------------------------------------------
   Named designs.
   ------------------------------------------------------------------------- */

struct catalog_entry {
  std::string name;
  design d;
  std::string provenance;
};

} // namespace dccd
