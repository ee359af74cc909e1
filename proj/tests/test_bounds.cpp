#include <doctest.h>

#include <cmath>

#include "thompson/bounds.h"
#include "thompson/errors.h"

using namespace thompson;

TEST_CASE("caret-only estimate") {
  CHECK(birgetUpper(0) == 0.0);
  CHECK(birgetUpper(1) == 0.0);
  CHECK(birgetUpper(2) == doctest::Approx(2.0));
  CHECK(birgetUpper(8) == doctest::Approx(24.0));
  CHECK(birgetUpper(3) == doctest::Approx(3.0 * std::log2(3.0)));
}

TEST_CASE("cluster-aware estimate") {
  for (std::size_t n = 1; n <= 20; ++n) {
    CHECK(newUpper(n, 1) == doctest::Approx(static_cast<double>(n)));
    CHECK(newUpper(n, 2) == doctest::Approx(static_cast<double>(n) + 2.0));
    CHECK(newUpper(n, n + 1) >= birgetUpper(n));
  }
  CHECK(newUpper(4, 4) == doctest::Approx(12.0));
  CHECK(newUpper(0, 1) == 0.0);
}

TEST_CASE("cluster count out of range") {
  CHECK_THROWS_AS(newUpper(3, 0), ContractViolation);
  CHECK_THROWS_AS(newUpper(3, 5), ContractViolation);
  CHECK_NOTHROW(newUpper(3, 4));
}
