#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bounds.hpp"
#include "design.hpp"

namespace dccd {

struct search_limits {
  std::uint64_t max_nodes = 50'000'000;
  bool allow_large = false; // lift the C(v,k) / b_max safety rails
};

struct search_result {
  design d;
  int b = 0;
  std::uint64_t nodes = 0;
};

namespace detail {

class min_blocks_search {
public:
  min_blocks_search(int v, int k, bool circular, const search_limits& lim)
      : v_(v), k_(k), circular_(circular), lim_(lim),
        covered_(static_cast<std::size_t>(v) * v, 0)
  {
  }

  std::optional<design> run(int b_target)
  {
    target_ = b_target;
    blocks_.clear();
    std::fill(covered_.begin(), covered_.end(), 0);
    uncovered_ = static_cast<std::uint64_t>(v_) * (v_ - 1) / 2;

    block first(k_);
    for (int i = 0; i < k_; ++i) first[i] = i;
    blocks_.push_back(first);
    max_point_ = k_ - 1;
    if (!circular_) cover_block(first, first); // linear: B_1 introduces everything

    std::optional<design> found;
    if (dfs(found)) return found;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  std::size_t pair_at(int x, int y) const
  {
    return static_cast<std::size_t>(std::min(x, y)) * v_ + std::max(x, y);
  }

  // count a covering event for every pair in blk touching an introduced point
  void cover_block(const block& blk, const block& intro)
  {
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        bool fresh = std::binary_search(intro.begin(), intro.end(), blk[i]) ||
                     std::binary_search(intro.begin(), intro.end(), blk[j]);
        if (!fresh) continue;
        if (covered_[pair_at(blk[i], blk[j])]++ == 0) --uncovered_;
      }
  }

  void uncover_block(const block& blk, const block& intro)
  {
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        bool fresh = std::binary_search(intro.begin(), intro.end(), blk[i]) ||
                     std::binary_search(intro.begin(), intro.end(), blk[j]);
        if (!fresh) continue;
        if (--covered_[pair_at(blk[i], blk[j])] == 0) ++uncovered_;
      }
  }

  bool complete(std::optional<design>& found)
  {
    if (circular_) {
      const block& last = blocks_.back();
      const block& head = blocks_.front();
      if (blocks_.size() > 1 && intersection_size(last, head) != k_ - 2) return false;
      block intro = blocks_.size() > 1 ? set_difference(head, last) : head;
      cover_block(head, intro);
      bool done = uncovered_ == 0;
      if (done) found = design(v_, k_, true, blocks_);
      uncover_block(head, intro);
      return done;
    }
    if (uncovered_ != 0) return false;
    found = design(v_, k_, false, blocks_);
    return true;
  }

  bool dfs(std::optional<design>& found)
  {
    const int placed = static_cast<int>(blocks_.size());
    if (placed == target_) return complete(found);

    // each future block introduces 2 points and covers at most 2k-3 new
    // pairs; a circular design gets one more such installment from the
    // wrap introductions of B_1
    std::uint64_t capacity =
        static_cast<std::uint64_t>(target_ - placed + (circular_ ? 1 : 0)) * (2 * k_ - 3);
    if (uncovered_ > capacity) return false;

    for (const auto& cand : successors()) {
      if (++nodes_ > lim_.max_nodes)
        throw budget_error("search budget exhausted after " + std::to_string(nodes_) + " nodes");
      block intro = set_difference(cand, blocks_.back());
      int saved_max = max_point_;
      blocks_.push_back(cand);
      for (int x : cand) max_point_ = std::max(max_point_, x);
      cover_block(cand, intro);
      if (dfs(found)) return true;
      uncover_block(cand, intro);
      blocks_.pop_back();
      max_point_ = saved_max;
    }
    return false;
  }

  /* Lexicographically ordered successor blocks: keep any (k-2)-subset of
     the last block and add two points outside it. Unseen points may only
     enter in ascending label order, which rejects relabel-isomorphic
     branches without losing any parameter set. */
  std::vector<block> successors() const
  {
    const block& last = blocks_.back();
    std::vector<block> out;
    auto keep_sets = kept_subsets(last);
    int limit = std::min(v_ - 1, max_point_ + 2);
    for (const auto& kept : keep_sets) {
      for (int a = 0; a <= limit; ++a) {
        if (std::binary_search(last.begin(), last.end(), a)) continue;
        if (a > max_point_ && a != max_point_ + 1) continue;
        int limit_b = std::min(v_ - 1, std::max(max_point_, a) + 1);
        for (int b = a + 1; b <= limit_b; ++b) {
          if (std::binary_search(last.begin(), last.end(), b)) continue;
          if (b > max_point_ && b != std::max(max_point_, a) + 1) continue;
          block cand = kept;
          cand.push_back(a);
          cand.push_back(b);
          std::sort(cand.begin(), cand.end());
          out.push_back(std::move(cand));
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<block> kept_subsets(const block& b) const
  {
    std::vector<block> out;
    // drop two positions i < j
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        block kept;
        kept.reserve(b.size() - 2);
        for (std::size_t t = 0; t < b.size(); ++t)
          if (t != i && t != j) kept.push_back(b[t]);
        out.push_back(std::move(kept));
      }
    return out;
  }

  int v_;
  int k_;
  bool circular_;
  search_limits lim_;
  int target_ = 0;
  std::vector<block> blocks_;
  std::vector<int> covered_;
  std::uint64_t uncovered_ = 0;
  int max_point_ = 0;
  std::uint64_t nodes_ = 0;
};

} // namespace detail

/**
 * Smallest double change covering design with at most b_max blocks, found
 * by iterative deepening over a canonical depth-first search (first block
 * pinned to {0..k-1}, new points in ascending order, successors tried in
 * lexicographic order — the witness is the lexicographically first one).
 * Returns nothing when no design with <= b_max blocks exists; throws
 * budget_error when the node budget runs out before that is settled.
 */
inline std::optional<search_result> exhaustive_min_blocks(int v, int k, bool circular, int b_max,
                                                          const search_limits& lim = {})
{
  if (k < 2 || v < k) throw parameter_error("exhaustive_min_blocks requires v >= k >= 2");
  if (b_max < 1) throw parameter_error("exhaustive_min_blocks requires b_max >= 1");
  if (!lim.allow_large) {
    if (binomial(v, k) > 10'000)
      throw parameter_error("refusing search with C(v,k) > 10^4; lift the limit explicitly");
    if (b_max > 12)
      throw parameter_error("refusing search with b_max > 12; lift the limit explicitly");
  }

  bound_query q{static_cast<unsigned>(v), static_cast<unsigned>(k), 2};
  std::uint64_t bound = circular ? lower_bound_circular(q) : lower_bound_linear(q);
  // a single block is legal (and unbeatable) exactly when it sees every pair
  int b_start = (v == k) ? 1 : static_cast<int>(bound);

  detail::min_blocks_search search(v, k, circular, lim);
  for (int b = b_start; b <= b_max; ++b) {
    if (auto d = search.run(b)) return search_result{std::move(*d), b, search.nodes()};
  }
  return std::nullopt;
}

} // namespace dccd
