#ifndef THOMPSON_TESTS_ORACLE_H
#define THOMPSON_TESTS_ORACLE_H

// Test-only reference model: an element acts on dyadic points of [0,1)
// through leaf intervals computed by plain recursion on the tree structure.
// Nothing here goes through the diagram arithmetic under test.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thompson/element.h"

namespace oracle {

// Points are integers p meaning p / 2^kScale.
inline constexpr unsigned kScale = 60;
inline constexpr std::uint64_t kOne = std::uint64_t{1} << kScale;

struct Interval {
  std::uint64_t left;
  unsigned depth;  // width 2^-depth

  std::uint64_t width() const { return kOne >> depth; }
};

inline void collect(const thompson::Tree& t, std::uint64_t left, unsigned depth,
                    std::vector<Interval>& out) {
  if (depth > 40) throw std::overflow_error("oracle depth limit");
  if (t.isLeaf()) {
    out.push_back({left, depth});
    return;
  }
  collect(t.left(), left, depth + 1, out);
  collect(t.right(), left + (kOne >> (depth + 1)), depth + 1, out);
}

inline std::vector<Interval> intervals(const thompson::Tree& t) {
  std::vector<Interval> out;
  collect(t, 0, 0, out);
  return out;
}

/// The map of one diagram, with its leaf intervals precomputed.
class Action {
 public:
  explicit Action(const thompson::Element& x)
      : src_(intervals(x.domain())), dst_(intervals(x.range())) {
    for (std::size_t i = 0; i < src_.size(); ++i) target_.push_back(dst_[x.perm()(i + 1) - 1]);
  }

  /// x(p) for a point p in [0, kOne).
  std::uint64_t operator()(std::uint64_t p) const {
    auto it = std::upper_bound(src_.begin(), src_.end(), p,
                               [](std::uint64_t v, const Interval& i) { return v < i.left; });
    if (it == src_.begin()) throw std::logic_error("point outside [0,1)");
    const std::size_t i = static_cast<std::size_t>(it - src_.begin()) - 1;
    const Interval& from = src_[i];
    const Interval& to = target_[i];
    const std::uint64_t offset = p - from.left;
    if (to.depth >= from.depth) return to.left + (offset >> (to.depth - from.depth));
    return to.left + (offset << (from.depth - to.depth));
  }

 private:
  std::vector<Interval> src_;
  std::vector<Interval> dst_;
  std::vector<Interval> target_;
};

inline unsigned maxDepth(const thompson::Tree& t) {
  unsigned d = 0;
  for (const auto& i : intervals(t)) d = std::max(d, i.depth);
  return d;
}

/// Dyadic grid of resolution 2^-(depth+1) plus every cell midpoint. Two maps
/// whose breakpoints all lie on the grid and agree on these points are equal.
inline std::vector<std::uint64_t> gridPoints(unsigned depth) {
  const unsigned g = depth + 1;
  std::vector<std::uint64_t> pts;
  const std::uint64_t cell = kOne >> g;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << g); ++k) {
    pts.push_back(k * cell);
    pts.push_back(k * cell + cell / 2);
  }
  return pts;
}

/// True if `product` acts as "first a, then b" on every grid point.
inline bool actsAsComposite(const thompson::Element& product,
                            const thompson::Element& a,
                            const thompson::Element& b) {
  const unsigned d = std::max(maxDepth(product.domain()),
                              maxDepth(a.domain()) + maxDepth(b.domain()));
  const Action fp(product), fa(a), fb(b);
  for (std::uint64_t p : gridPoints(std::min(d, 14U))) {
    if (fp(p) != fb(fa(p))) return false;
  }
  return true;
}

/// True if x and y act identically on the grid.
inline bool sameAction(const thompson::Element& x, const thompson::Element& y) {
  const unsigned d = std::max(maxDepth(x.domain()), maxDepth(y.domain()));
  const Action fx(x), fy(y);
  for (std::uint64_t p : gridPoints(std::min(d, 14U))) {
    if (fx(p) != fy(p)) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // THOMPSON_TESTS_ORACLE_H
