#ifndef THOMPSON_ERRORS_H
#define THOMPSON_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thompson {

/// A documented precondition was violated by the caller.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Cayley-graph search ran out of its memory budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, unsigned completedRadius)
      : std::runtime_error(what), completedRadius_(completedRadius) {}

  /// Largest radius whose ball was fully enumerated before the budget ran out.
  unsigned completedRadius() const noexcept { return completedRadius_; }

 private:
  unsigned completedRadius_;
};

}  // namespace thompson

#endif  // THOMPSON_ERRORS_H
