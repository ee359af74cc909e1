#include "thompson/bounds.h"

#include <cmath>
#include <string>

#include "thompson/errors.h"

namespace thompson {

namespace {

double nLogN(std::size_t n) {
  if (n <= 1) return 0.0;
  const double x = static_cast<double>(n);
  return x * std::log2(x);
}

}  // namespace

double birgetUpper(std::size_t carets) { return nLogN(carets); }

double newUpper(std::size_t carets, std::size_t clusters) {
  if (clusters < 1 || clusters > carets + 1) {
    throw ContractViolation("cluster count " + std::to_string(clusters) +
                            " outside [1, " + std::to_string(carets + 1) + "]");
  }
  return static_cast<double>(carets) + nLogN(clusters);
}

}  // namespace thompson
