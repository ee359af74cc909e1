#include "thompson/collapse.h"

#include <algorithm>

#include "thompson/errors.h"

namespace thompson {

Tree combOfCombs(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw ContractViolation("need at least one block");
  Tree t = Tree::rightComb(sizes.size() - 1);
  // Graft right to left so earlier leaf indices stay valid.
  for (std::size_t j = sizes.size(); j-- > 0;) {
    if (sizes[j] == 0) throw ContractViolation("empty block");
    t = t.graft(j + 1, Tree::rightComb(sizes[j] - 1));
  }
  return t;
}

CollapseResult collapseClusters(const Element& input) {
  const Element x = reduce(input);
  const auto runs = clusterPartition(x.perm()).runs;

  std::vector<std::size_t> domainSizes;
  domainSizes.reserve(runs.size());
  for (const auto& run : runs) domainSizes.push_back(run.size());

  // The image of each run is again a run of consecutive leaves; order the
  // runs by where their images start.
  std::vector<const ClusterRun*> byImage;
  for (const auto& run : runs) byImage.push_back(&run);
  std::sort(byImage.begin(), byImage.end(),
            [&](const ClusterRun* a, const ClusterRun* b) {
              return x.perm()(a->first) < x.perm()(b->first);
            });
  std::vector<std::size_t> rangeSizes;
  rangeSizes.reserve(runs.size());
  for (const auto* run : byImage) rangeSizes.push_back(run->size());

  const Tree domainShape = combOfCombs(domainSizes);
  const Tree rangeShape = combOfCombs(rangeSizes);
  const Permutation id = Permutation::identity(x.leafCount());

  CollapseResult out{
      Element(domainShape, x.domain(), id),
      Element(x.range(), rangeShape, id),
      Element(),
      domainShape.caretCount(),
      rangeShape.caretCount(),
  };
  out.collapsed = multiply(multiply(out.y, x), out.z);
  return out;
}

}  // namespace thompson
