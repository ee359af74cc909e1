#ifndef THOMPSON_EXPERIMENTS_H
#define THOMPSON_EXPERIMENTS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "thompson/cayley.h"
#include "thompson/element.h"
#include "thompson/word.h"

namespace thompson::experiments {

/// Right comb with 2n+1 carets on both sides, swapping leaves 2n and 2n+1.
Element counterexampleY(std::size_t n);

/// How a conjugation x0^e y_1 x0^-e is read when evaluated left to right.
enum class Convention {
  /// x0^-(2n-2) y_1 x0^(2n-2), read right to left.
  Literal,
  /// x0^(2n-2) y_1 x0^-(2n-2), exponents negated.
  Mirrored,
};

std::string toString(Convention c);

struct ConjugationReport {
  std::size_t n = 0;
  bool literalHolds = false;
  bool mirroredHolds = false;
};

/// Compares y_n against both readings of the conjugation formula.
ConjugationReport verifyConjugationIdentity(std::size_t n);

/// The reading under which y_2 is the conjugate of y_1. Throws
/// std::logic_error if neither or both validate.
Convention validatedConvention();

/// Word for y_1 x0^-2 y_1 x0^-2 ... y_1 x0^(2n-2) (exponents negated under
/// Convention::Mirrored) with every y_1 replaced by `y1Word`.
Word counterexampleProductWord(std::size_t n, Convention convention,
                               const Word& y1Word);

struct CounterexampleProduct {
  /// y_1 y_2 ... y_n, reduced.
  Element product;
  /// Word built from the product formula under validatedConvention().
  Word word;
};

CounterexampleProduct counterexampleProduct(std::size_t n);

/// Uniform full binary tree with the given caret count (Remy's algorithm).
Tree randomTree(std::size_t carets, std::mt19937_64& rng);

/// Reduced element from two independent uniform trees and a uniform
/// permutation. Deterministic in `seed`.
Element randomElement(std::size_t carets, std::uint64_t seed);
/// As randomElement with the identity permutation.
Element randomFElement(std::size_t carets, std::uint64_t seed);
/// As randomElement with a nontrivial rotation of the leaves.
Element randomTElement(std::size_t carets, std::uint64_t seed);

struct SurveyRecord {
  std::string elementText;
  std::size_t N = 0;
  std::size_t B = 0;
  std::optional<unsigned> exactLength;
  double birget = 0.0;
  double newBound = 0.0;
};

/// `count` random elements with seeds seed, seed+1, ...; exact lengths are
/// filled in when the element lies in the ball of the given radius.
std::vector<SurveyRecord> surveyBounds(std::size_t count, std::size_t carets,
                                       unsigned radius, std::uint64_t seed,
                                       std::size_t memoryBudgetBytes = memoryBudgetBytesFromEnv());

/// CSV with header element,N,B,exact_length,birget_upper,new_upper.
void writeSurveyCsv(std::ostream& out, const std::vector<SurveyRecord>& records);

/// N, B and distance of one ball element.
struct BallStat {
  std::uint32_t N;
  std::uint32_t B;
  std::uint32_t distance;
};

struct ConstantsReport {
  unsigned radius = 0;
  std::vector<std::size_t> sphereSizes;
  /// max N/||x|| over nonidentity x, with its first witness in BFS order.
  double c1 = 0.0;
  std::string c1Witness;
  /// max ||x||/(N + B log2 B + 1) over nonidentity x.
  double c2 = 0.0;
  std::string c2Witness;
  /// max of newUpper(N,B) - birgetUpper(N) over the ball.
  double c0 = 0.0;
  std::size_t maxN = 0;
  std::size_t maxB = 0;
  std::vector<BallStat> stats;
};

/// Enumerates the full ball of the given radius and reports the empirical
/// constants of both inequalities.
ConstantsReport estimateConstants(unsigned radius,
                                  std::size_t memoryBudgetBytes = memoryBudgetBytesFromEnv());

/// key: value lines; logarithmic quantities with 6 decimals.
void writeConstantsReport(std::ostream& out, const ConstantsReport& report);

/// Formats a real with 6 decimals.
std::string fixed6(double v);

}  // namespace thompson::experiments

#endif  // THOMPSON_EXPERIMENTS_H
