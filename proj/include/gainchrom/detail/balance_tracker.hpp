#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gainchrom::detail {

/// Union-find over vertices 0..n-1 that maintains, for every component, a
/// potential eta with eta(head) = eta(tail) - gain along added edges, and
/// whether the component is balanced. Additions can be undone in LIFO order.
///
/// modulus == 0 means gains live in Z, otherwise in Z_modulus.
class BalanceTracker {
 public:
  BalanceTracker(int n, std::int64_t modulus = 0)
      : parent_(static_cast<std::size_t>(n)),
        size_(static_cast<std::size_t>(n), 1),
        offset_(static_cast<std::size_t>(n), 0),
        balanced_(static_cast<std::size_t>(n), 1),
        modulus_(modulus),
        components_(n),
        balanced_components_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int components() const { return components_; }
  int balanced_components() const { return balanced_components_; }
  bool all_balanced() const { return components_ == balanced_components_; }

  void add_edge(int tail, int head, std::int64_t gain) {
    auto [rt, pt] = find(tail);
    auto [rh, ph] = find(head);
    Frame f;
    if (rt == rh) {
      f.kind = Frame::Kind::kSame;
      f.root = rt;
      f.was_balanced = balanced_[rt];
      if (balanced_[rt] && reduce(ph - pt + gain) != 0) {
        balanced_[rt] = 0;
        --balanced_components_;
      }
    } else {
      // potential of rh relative to rt so that p(head) - p(tail) = -gain
      std::int64_t rel = pt - ph - gain;
      if (size_[rt] < size_[rh]) {
        std::swap(rt, rh);
        rel = -rel;
      }
      f.kind = Frame::Kind::kMerge;
      f.root = rt;
      f.child = rh;
      f.was_balanced = balanced_[rt];
      f.child_balanced = balanced_[rh];
      parent_[rh] = rt;
      offset_[rh] = reduce(rel);
      size_[rt] += size_[rh];
      const int before = (balanced_[rt] ? 1 : 0) + (balanced_[rh] ? 1 : 0);
      balanced_[rt] = balanced_[rt] && balanced_[rh];
      balanced_components_ -= before - (balanced_[rt] ? 1 : 0);
      --components_;
    }
    history_.push_back(f);
  }

  void rollback() {
    const Frame f = history_.back();
    history_.pop_back();
    if (f.kind == Frame::Kind::kSame) {
      if (f.was_balanced && !balanced_[f.root]) ++balanced_components_;
      balanced_[f.root] = f.was_balanced;
      return;
    }
    balanced_components_ -= balanced_[f.root] ? 1 : 0;
    balanced_[f.root] = f.was_balanced;
    balanced_[f.child] = f.child_balanced;
    balanced_components_ += (f.was_balanced ? 1 : 0) + (f.child_balanced ? 1 : 0);
    size_[f.root] -= size_[f.child];
    parent_[f.child] = f.child;
    offset_[f.child] = 0;
    ++components_;
  }

  /// Root of v and the potential of v relative to that root.
  std::pair<int, std::int64_t> find(int v) const {
    std::int64_t pot = 0;
    while (parent_[v] != v) {
      pot += offset_[v];
      v = parent_[v];
    }
    return {v, reduce(pot)};
  }

 private:
  struct Frame {
    enum class Kind { kSame, kMerge } kind = Kind::kSame;
    int root = 0;
    int child = 0;
    bool was_balanced = true;
    bool child_balanced = true;
  };

  std::int64_t reduce(std::int64_t x) const {
    if (modulus_ == 0) return x;
    x %= modulus_;
    return x < 0 ? x + modulus_ : x;
  }

  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::int64_t> offset_;
  std::vector<char> balanced_;
  std::int64_t modulus_;
  int components_;
  int balanced_components_;
  std::vector<Frame> history_;
};

}  // namespace gainchrom::detail
