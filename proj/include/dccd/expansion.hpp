#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "design.hpp"
#include "one_factorization.hpp"

namespace dccd {

/**
 * A selection of unchanged subsets, one per listed gap, that partitions
 * the point set. Gap indices: 0 is the head gap of a linear design
 * (before B_1), i in 1..b-1 sits between B_i and B_{i+1}, and b is the
 * tail gap of a linear design or the wrap gap of a circular one. The
 * parts at gaps 0 and b of a linear design record the concrete end
 * choices made from the free (k-2)-subset domains.
 */
struct expansion_set {
  std::vector<int> locations;   // sorted ascending
  std::vector<block> parts;     // parts[i] belongs to locations[i]
};

namespace detail {

struct gap_candidates {
  int location;
  std::vector<block> parts; // lexicographically ordered alternatives
};

/* All gaps of a double change design with their candidate parts, in
   ascending gap order. Interior and wrap gaps have one fixed part; the
   end gaps of a linear design offer every (k-2)-subset of the end block. */
inline std::vector<gap_candidates> expansion_candidates(const design& d)
{
  auto us = unchanged_subsets(d);
  std::vector<gap_candidates> gaps;
  if (!d.circular) gaps.push_back({0, us.head_domain});
  for (int i = 0; i < static_cast<int>(us.interior.size()); ++i)
    gaps.push_back({i + 1, {us.interior[i]}});
  if (d.circular) {
    if (us.wrap) gaps.push_back({d.b(), {*us.wrap}});
  } else {
    gaps.push_back({d.b(), us.tail_domain});
  }
  return gaps;
}

class partition_search {
public:
  partition_search(const std::vector<gap_candidates>& gaps, int v, int part_size)
      : gaps_(gaps), v_(v), part_size_(part_size), used_(v, 0), cnt_(v, 0)
  {
    for (const auto& g : gaps_)
      for_coverable(g, [&](int x) { ++cnt_[x]; });
  }

  std::optional<expansion_set> run()
  {
    expansion_set found;
    if (dfs(0, 0, found)) return found;
    return std::nullopt;
  }

private:
  template <typename Fn>
  void for_coverable(const gap_candidates& g, Fn&& fn) const
  {
    // every point that some candidate at this gap could supply
    std::vector<char> seen(v_, 0);
    for (const auto& p : g.parts)
      for (int x : p)
        if (!seen[x]) { seen[x] = 1; fn(x); }
  }

  bool dfs(std::size_t g, int covered, expansion_set& out)
  {
    if (covered == v_) return true;
    if (g == gaps_.size()) return false;
    for (int x = 0; x < v_; ++x)
      if (!used_[x] && cnt_[x] == 0) return false;
    int needed = (v_ - covered) / part_size_;
    if (static_cast<int>(gaps_.size() - g) < needed) return false;

    for_coverable(gaps_[g], [&](int x) { --cnt_[x]; });
    for (const auto& part : gaps_[g].parts) {
      bool clash = false;
      for (int x : part)
        if (used_[x]) { clash = true; break; }
      if (clash) continue;
      for (int x : part) used_[x] = 1;
      out.locations.push_back(gaps_[g].location);
      out.parts.push_back(part);
      if (dfs(g + 1, covered + part_size_, out)) return true;
      out.locations.pop_back();
      out.parts.pop_back();
      for (int x : part) used_[x] = 0;
    }
    bool r = dfs(g + 1, covered, out);
    if (!r)
      for_coverable(gaps_[g], [&](int x) { ++cnt_[x]; });
    return r;
  }

  const std::vector<gap_candidates>& gaps_;
  int v_;
  int part_size_;
  std::vector<char> used_;
  std::vector<int> cnt_;
};

} // namespace detail

/**
 * First expansion set of a double change design in depth-first order over
 * ascending gaps (include before skip, end-gap alternatives in
 * lexicographic order), so the answer is the lexicographically least
 * partition and is fully deterministic. Returns nothing when (k-2) does
 * not divide v (no partition into (k-2)-sets can exist) or when the exact
 * cover has no solution.
 */
inline std::optional<expansion_set> find_expansion_set(const design& d)
{
  if (d.k <= 2) return std::nullopt;
  if (d.v % (d.k - 2) != 0) return std::nullopt;
  auto gaps = detail::expansion_candidates(d); // throws if not double change
  detail::partition_search search(gaps, d.v, d.k - 2);
  return search.run();
}

/**
 * Grow a double change design by l + 1 points, l = v/(k-2) odd: new points
 * are labeled v..v+l, and at the j-th expansion location (ascending) one
 * block per edge of the j-th factor is inserted, each the unchanged part
 * plus the edge's two points. Head-gap blocks go before B_1; blocks at gap
 * i >= 1 go right after B_i. Coverage, change structure, circularity and
 * tightness all carry over from the input.
 */
inline design expand(const design& d, const expansion_set& e, const one_factorization& f)
{
  if (!verify_m_change(d, 2).ok) throw structural_error("expand: input is not double change");
  if (d.k <= 2 || d.v % (d.k - 2) != 0)
    throw structural_error("expand: point count is not a multiple of k-2");
  const int l = d.v / (d.k - 2);
  if (l % 2 == 0) throw structural_error("expand: expansion set size is even");
  if (static_cast<int>(e.locations.size()) != l)
    throw structural_error("expand: expansion set must have v/(k-2) locations");
  if (f.n != l + 1) throw structural_error("expand: factorization must be on v/(k-2) + 1 vertices");
  if (!verify_factorization(f).ok) throw structural_error("expand: invalid 1-factorization");

  // the parts must partition the points and match their gaps
  {
    std::vector<char> used(d.v, 0);
    auto gaps = detail::expansion_candidates(d);
    for (std::size_t j = 0; j < e.locations.size(); ++j) {
      if (j > 0 && e.locations[j - 1] >= e.locations[j])
        throw structural_error("expand: locations must be strictly ascending");
      const auto& part = e.parts[j];
      auto it = std::find_if(gaps.begin(), gaps.end(),
                             [&](const auto& g) { return g.location == e.locations[j]; });
      if (it == gaps.end())
        throw structural_error("expand: no gap at location " + std::to_string(e.locations[j]));
      if (std::find(it->parts.begin(), it->parts.end(), part) == it->parts.end())
        throw structural_error("expand: part does not match the unchanged subset at gap " +
                               std::to_string(e.locations[j]));
      for (int x : part) {
        if (used[x]) throw structural_error("expand: parts are not disjoint");
        used[x] = 1;
      }
    }
    if (!std::all_of(used.begin(), used.end(), [](char u) { return u != 0; }))
      throw structural_error("expand: parts do not cover every point");
  }

  // insertion blocks per location, factor j to the j-th location
  std::vector<std::vector<block>> inserted(d.b() + 1);
  for (std::size_t j = 0; j < e.locations.size(); ++j) {
    for (auto [a, bvx] : f.factors[j]) {
      block nb = e.parts[j];
      nb.push_back(d.v + a);
      nb.push_back(d.v + bvx);
      std::sort(nb.begin(), nb.end());
      inserted[e.locations[j]].push_back(std::move(nb));
    }
  }

  std::vector<block> blocks;
  blocks.reserve(d.b() + l * (l + 1) / 2);
  for (auto& nb : inserted[0]) blocks.push_back(nb);
  for (int i = 0; i < d.b(); ++i) {
    blocks.push_back(d.blocks[i]);
    for (auto& nb : inserted[i + 1]) blocks.push_back(nb);
  }

  design out(d.v + l + 1, d.k, d.circular, std::move(blocks));
  auto chk = verify_m_change(out, 2);
  if (!chk.ok)
    throw structural_error("expand: output lost the double change property at gap " +
                           std::to_string(chk.first_bad_gap));
  return out;
}

/**
 * Every (k, c), c <= 5, where the developed difference family admits an
 * expansion set of odd size — i.e. k-2 divides 2c+1 — expanded by the
 * circle-method factorization. Eleven parameter sets, ordered by c then k.
 * Each output is verified tight before being returned.
 */
inline std::vector<catalog_entry> corollary_chain()
{
  std::vector<catalog_entry> out;
  for (int c = 1; c <= 5; ++c)
    for (int k = 3; k - 2 <= 2 * c + 1; ++k) {
      if ((2 * c + 1) % (k - 2) != 0) continue;
      auto fam = base_family(k, c);
      design d = develop(fam);
      auto es = find_expansion_set(d);
      if (!es)
        throw structural_error("recursion chain: no expansion set for k=" + std::to_string(k) +
                               " c=" + std::to_string(c));
      int l = d.v / (d.k - 2);
      design grown = expand(d, *es, circle_method(l + 1));
      if (!classify(grown).tight)
        throw structural_error("recursion chain: expansion of k=" + std::to_string(k) +
                               " c=" + std::to_string(c) + " is not tight");
      catalog_entry entry;
      entry.name = "cdccd-" + std::to_string(grown.v) + "-" + std::to_string(grown.k) + "-" +
                   std::to_string(grown.b());
      entry.provenance = "difference family (k=" + std::to_string(k) + ", c=" + std::to_string(c) +
                         ") developed over Z" + std::to_string(d.v) + ", expanded by K" +
                         std::to_string(l + 1);
      entry.d = std::move(grown);
      out.push_back(std::move(entry));
    }
  return out;
}

} // namespace dccd
