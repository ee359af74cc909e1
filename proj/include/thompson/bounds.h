#ifndef THOMPSON_BOUNDS_H
#define THOMPSON_BOUNDS_H

#include <cstddef>

namespace thompson {

/// n log2 n, the caret-only upper estimate; 0 for n <= 1.
double birgetUpper(std::size_t carets);

/// n + b log2 b, the cluster-aware upper estimate. Requires
/// 1 <= b <= n + 1; throws ContractViolation otherwise.
double newUpper(std::size_t carets, std::size_t clusters);

}  // namespace thompson

#endif  // THOMPSON_BOUNDS_H
