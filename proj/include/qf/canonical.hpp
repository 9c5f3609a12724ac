#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "qf/vertex_set.hpp"

namespace qf {

/// Result of canonically relabelling a family of vertex sets on {1..n}.
struct CanonicalLabeling {
  /// Relabelled sets, ascending by mask.
  std::vector<Mask> sets;
  /// position_of[v-1] = new label of old vertex v.
  std::vector<int> position_of;
};

namespace detail {

// Branch-and-bound search for the relabelling whose indicator string
// (bit for every subset of {1..n}, subsets in increasing mask order) is
// lexicographically least. Positions are filled in label order; once
// labels 1..j are placed, every set whose image lies inside {1..j} is known,
// and those images are exactly the prefix of the indicator string below
// 2^j. Vertices whose transposition is an automorphism (twins) yield
// identical subtrees, so only one per twin class is tried at each level.
class CanonicalSearch {
public:
  CanonicalSearch(int n, std::span<const Mask> sets) : n_(n), sets_(sets.begin(), sets.end()) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    compute_twins();
    vertex_at_.assign(n_, -1);
    pos_of_.assign(n_, -1);
    cur_.assign(n_, {});
    best_.assign(n_, {});
    rel_.assign(n_, 0);
  }

  CanonicalLabeling run() {
    if (n_ == 0) return {{}, {}};
    dfs(0, 0);
    CanonicalLabeling out;
    for (const auto& seg : best_) out.sets.insert(out.sets.end(), seg.begin(), seg.end());
    if (std::binary_search(sets_.begin(), sets_.end(), Mask{0})) out.sets.insert(out.sets.begin(), 0);
    out.position_of.resize(n_);
    for (int v = 0; v < n_; ++v) out.position_of[v] = best_pos_[v] + 1;
    return out;
  }

private:
  void compute_twins() {
    twin_class_.resize(n_);
    for (int v = 0; v < n_; ++v) twin_class_[v] = v;
    std::vector<Mask> swapped(sets_.size());
    for (int u = 0; u < n_; ++u) {
      if (twin_class_[u] != u) continue;
      for (int v = u + 1; v < n_; ++v) {
        if (twin_class_[v] != v) continue;
        const Mask bu = Mask{1} << u, bv = Mask{1} << v;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
          Mask s = sets_[i];
          const bool hu = s & bu, hv = s & bv;
          if (hu != hv) s ^= (bu | bv);
          swapped[i] = s;
        }
        std::sort(swapped.begin(), swapped.end());
        if (swapped == sets_) twin_class_[v] = u;
      }
    }
  }

  // -1 if a < b in indicator-string order, 0 if equal, 1 if greater.
  static int compare_segment(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == b[i]) continue;
      return a[i] < b[i] ? 1 : -1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
  }

  void dfs(int depth, Mask placed) {
    if (depth == n_) {
      if (!have_best_ || rel_[n_ - 1] < 0) {
        best_ = cur_;
        best_pos_ = pos_of_;
        have_best_ = true;
        std::fill(rel_.begin(), rel_.end(), 0);
      }
      return;
    }
    std::vector<char> tried(n_, 0);
    for (int v = 0; v < n_; ++v) {
      if (pos_of_[v] >= 0 || tried[twin_class_[v]]) continue;
      tried[twin_class_[v]] = 1;

      pos_of_[v] = depth;
      vertex_at_[depth] = v;
      const Mask now = placed | (Mask{1} << v);
      auto& seg = cur_[depth];
      seg.clear();
      for (Mask s : sets_) {
        if ((s & (Mask{1} << v)) == 0 || (s & ~now) != 0) continue;
        Mask image = 0;
        for (Mask t = s; t != 0; t &= t - 1) image |= Mask{1} << pos_of_[std::countr_zero(t)];
        seg.push_back(image);
      }
      std::sort(seg.begin(), seg.end());

      int rel;
      if (!have_best_) {
        rel = -1;
      } else if (depth > 0 && rel_[depth - 1] != 0) {
        rel = rel_[depth - 1];
      } else {
        rel = compare_segment(seg, best_[depth]);
      }
      rel_[depth] = rel;
      if (rel <= 0) dfs(depth + 1, now);

      pos_of_[v] = -1;
      vertex_at_[depth] = -1;
    }
  }

  int n_;
  std::vector<Mask> sets_;
  std::vector<int> twin_class_;
  std::vector<int> vertex_at_;
  std::vector<int> pos_of_;
  std::vector<int> best_pos_;
  std::vector<std::vector<Mask>> cur_;
  std::vector<std::vector<Mask>> best_;
  std::vector<int> rel_;
  bool have_best_ = false;
};

}  // namespace detail

/// Lexicographically least relabelling of `sets` over all permutations of
/// {1..n}. Two families are isomorphic iff their `sets` coincide.
inline CanonicalLabeling canonical_labeling(int n, std::span<const Mask> sets) {
  return detail::CanonicalSearch(n, sets).run();
}

}  // namespace qf
