#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace dccd {

using block = std::vector<int>; // sorted k-subset of [0, v)

/**
 * An ordered list of b blocks of size k over points 0..v-1, optionally
 * circular. The change number m is a property checked against the block
 * sequence, never stored: the same object can hold a single change or a
 * double change design. (A double change sequence with b > 1 forces
 * v >= k + 2 on its own, since consecutive blocks span k + 2 points.)
 */
struct design {
  int v = 0;
  int k = 0;
  bool circular = false;
  std::vector<block> blocks;

  design() = default;

  design(int v_, int k_, bool circular_, std::vector<block> blocks_)
      : v(v_), k(k_), circular(circular_), blocks(std::move(blocks_))
  {
    if (v < 1 || k < 1 || k > v)
      throw parameter_error("design requires 1 <= k <= v");
    if (blocks.empty()) throw parameter_error("design requires at least one block");
    for (auto& b : blocks) {
      std::sort(b.begin(), b.end());
      if (static_cast<int>(b.size()) != k)
        throw parameter_error("every block must have exactly k points");
      if (std::adjacent_find(b.begin(), b.end()) != b.end())
        throw parameter_error("block points must be distinct");
      if (b.front() < 0 || b.back() >= v)
        throw parameter_error("block points must lie in [0, v)");
    }
  }

  int b() const { return static_cast<int>(blocks.size()); }
};

inline int intersection_size(const block& a, const block& b)
{
  // both sorted
  int n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++n; ++i; ++j; }
  }
  return n;
}

inline block set_intersection(const block& a, const block& b)
{
  block out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline block set_difference(const block& a, const block& b)
{
  block out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/* Gap i (1-based) sits between B_i and B_{i+1}; the wrap gap of a circular
   design is gap b, between B_b and B_1. */
struct m_change_report {
  bool ok = true;
  int first_bad_gap = 0;   // meaningful only when !ok
  int intersection = 0;    // size seen at that gap
};

/* Checks |B_i inter B_{i+1}| == k - m at every gap, including the wrap gap
   for circular designs. A single block has no gaps and passes for any m. */
inline m_change_report verify_m_change(const design& d, int m)
{
  if (m < 1 || m > d.k) throw parameter_error("verify_m_change requires 1 <= m <= k");
  const int want = d.k - m;
  for (int i = 0; i + 1 < d.b(); ++i) {
    int got = intersection_size(d.blocks[i], d.blocks[i + 1]);
    if (got != want) return {false, i + 1, got};
  }
  if (d.circular && d.b() > 1) {
    int got = intersection_size(d.blocks.back(), d.blocks.front());
    if (got != want) return {false, d.b(), got};
  }
  return {};
}

/* Per-block introduced points: members absent from the predecessor block.
   Block 1 of a linear design (and any single block design) introduces all
   of its points; block 1 of a circular design is compared against B_b. */
inline std::vector<block> introductions(const design& d)
{
  std::vector<block> intro(d.blocks.size());
  for (int i = 0; i < d.b(); ++i) {
    if (i == 0) {
      if (d.circular && d.b() > 1)
        intro[0] = set_difference(d.blocks[0], d.blocks.back());
      else
        intro[0] = d.blocks[0];
    } else {
      intro[i] = set_difference(d.blocks[i], d.blocks[i - 1]);
    }
  }
  return intro;
}

/**
 * Multiplicity ledger for t-set coverage. A t-set is covered in a block
 * when it lies inside the block and at least one of its members is
 * introduced there; multiplicity counts such blocks.
 *
 * t = 2 is kept in a flat triangular array (the hot path); larger t falls
 * back to an explicit map keyed by the sorted t-set.
 */
class coverage_ledger {
public:
  coverage_ledger(int v, int t) : v_(v), t_(t)
  {
    if (t == 2) pair_counts_.assign(static_cast<std::size_t>(v) * (v - 1) / 2, 0);
  }

  int v() const { return v_; }
  int t() const { return t_; }

  int multiplicity(const std::vector<int>& tset) const
  {
    if (t_ == 2) return pair_counts_[pair_index(tset[0], tset[1])];
    auto it = counts_.find(tset);
    return it == counts_.end() ? 0 : it->second;
  }

  int pair_multiplicity(int x, int y) const { return pair_counts_[pair_index(x, y)]; }

  void add(const std::vector<int>& tset)
  {
    if (t_ == 2) ++pair_counts_[pair_index(tset[0], tset[1])];
    else ++counts_[tset];
  }

  std::uint64_t total_tsets() const
  {
    // C(v, t) without pulling in bounds.hpp
    std::uint64_t acc = 1;
    for (int i = 1; i <= t_; ++i) acc = acc * (v_ - i + 1) / i;
    return acc;
  }

  std::uint64_t covered_count() const
  {
    if (t_ == 2)
      return static_cast<std::uint64_t>(
          std::count_if(pair_counts_.begin(), pair_counts_.end(), [](int c) { return c > 0; }));
    return counts_.size();
  }

  std::uint64_t uncovered_count() const { return total_tsets() - covered_count(); }

  bool all_covered() const { return uncovered_count() == 0; }

  bool exactly_once() const
  {
    if (t_ == 2)
      return std::all_of(pair_counts_.begin(), pair_counts_.end(), [](int c) { return c == 1; });
    if (counts_.size() != total_tsets()) return false;
    return std::all_of(counts_.begin(), counts_.end(), [](auto& kv) { return kv.second == 1; });
  }

  std::uint64_t total_events() const
  {
    std::uint64_t s = 0;
    if (t_ == 2)
      for (int c : pair_counts_) s += c;
    else
      for (auto& kv : counts_) s += kv.second;
    return s;
  }

  /* Uncovered t-sets, in lexicographic order (t = 2 only; enough for the
     diagnostics this library prints). */
  std::vector<std::pair<int, int>> uncovered_pairs() const
  {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < v_; ++x)
      for (int y = x + 1; y < v_; ++y)
        if (pair_counts_[pair_index(x, y)] == 0) out.emplace_back(x, y);
    return out;
  }

private:
  std::size_t pair_index(int x, int y) const
  {
    if (x > y) std::swap(x, y);
    // pairs (0,1), (0,2), ..., (0,v-1), (1,2), ...
    return static_cast<std::size_t>(x) * (2 * v_ - x - 1) / 2 + (y - x - 1);
  }

  int v_;
  int t_;
  std::vector<int> pair_counts_;
  std::map<std::vector<int>, int> counts_;
};

namespace detail {

template <typename Fn>
void for_each_subset(const block& b, int t, Fn&& fn)
{
  const int n = static_cast<int>(b.size());
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  std::vector<int> tset(t);
  while (true) {
    for (int i = 0; i < t; ++i) tset[i] = b[idx[i]];
    fn(tset);
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace detail

inline coverage_ledger coverage(const design& d, int t = 2)
{
  if (t < 1 || t > d.k) throw parameter_error("coverage requires 1 <= t <= k");
  coverage_ledger ledger(d.v, t);
  auto intro = introductions(d);
  for (int i = 0; i < d.b(); ++i) {
    const block& in = intro[i];
    detail::for_each_subset(d.blocks[i], t, [&](const std::vector<int>& tset) {
      bool fresh = std::any_of(tset.begin(), tset.end(), [&](int x) {
        return std::binary_search(in.begin(), in.end(), x);
      });
      if (fresh) ledger.add(tset);
    });
  }
  return ledger;
}

/**
 * Unchanged subsets of a double change design: U_i = B_i inter B_{i+1} for
 * the interior gaps. A circular design pins the wrap subset to B_b inter
 * B_1; a linear design instead gets a free choice of any (k-2)-subset of
 * B_1 for the head gap and of B_b for the tail gap, returned here as the
 * full choice domains.
 */
struct unchanged_subsets_result {
  std::vector<block> interior;       // U_1 .. U_{b-1}
  std::optional<block> wrap;         // circular only: U_0 == U_b
  std::vector<block> head_domain;    // linear only: candidate U_0 sets
  std::vector<block> tail_domain;    // linear only: candidate U_b sets
};

namespace detail {

inline std::vector<block> subsets_of_size(const block& b, int r)
{
  std::vector<block> out;
  for_each_subset(b, r, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

} // namespace detail

inline unchanged_subsets_result unchanged_subsets(const design& d)
{
  auto chk = verify_m_change(d, 2);
  if (!chk.ok)
    throw structural_error("not a double change design: gap " + std::to_string(chk.first_bad_gap) +
                           " has intersection size " + std::to_string(chk.intersection));
  unchanged_subsets_result out;
  for (int i = 0; i + 1 < d.b(); ++i)
    out.interior.push_back(set_intersection(d.blocks[i], d.blocks[i + 1]));
  if (d.circular) {
    if (d.b() > 1) out.wrap = set_intersection(d.blocks.back(), d.blocks.front());
  } else {
    out.head_domain = detail::subsets_of_size(d.blocks.front(), d.k - 2);
    out.tail_domain = detail::subsets_of_size(d.blocks.back(), d.k - 2);
  }
  return out;
}

} // namespace dccd
