#ifndef THOMPSON_COLLAPSE_H
#define THOMPSON_COLLAPSE_H

#include <cstddef>
#include <span>

#include "thompson/element.h"

namespace thompson {

/// Output of the cluster collapse. `y` and `z` are kept as constructed
/// (possibly unreduced) diagrams so their caret counts can be inspected.
struct CollapseResult {
  Element y;
  Element z;
  /// reduce(y x z): one leaf per cluster of x.
  Element collapsed;
  std::size_t yDiagramCarets = 0;
  std::size_t zDiagramCarets = 0;
};

/// A right comb with sizes.size() leaves whose j-th leaf carries a right
/// comb with sizes[j] leaves. Every size must be >= 1.
Tree combOfCombs(std::span<const std::size_t> sizes);

/// Pre- and post-composes x by elements of F so that every cluster sits
/// under identical right combs on both sides, then reduces. The clusters of
/// x collapse to single leaves.
CollapseResult collapseClusters(const Element& x);

}  // namespace thompson

#endif  // THOMPSON_COLLAPSE_H
