#ifndef THOMPSON_SYNTHESIS_H
#define THOMPSON_SYNTHESIS_H

#include <cstddef>
#include <vector>

#include "thompson/element.h"
#include "thompson/word.h"

namespace thompson {

/// Bound K with |fNormalFormWord(f)| <= K * max(1, N(f)), checked by tests.
inline constexpr std::size_t kFWordLengthFactor = 6;

/// Spine positions of the right rotations that turn `t` into the right
/// comb with the same leaf count, in the order they are applied. The
/// sequence is non-decreasing; its length is the number of carets off the
/// right spine.
std::vector<std::size_t> spineRotationsToComb(const Tree& t);

/// Word over {x0, x1} for the generator x_k that rotates at spine node k:
/// x0 for k = 0, otherwise x0^(k-1) x1 x0^-(k-1).
Word spineGeneratorWord(std::size_t k, int exponent);

/// A freely reduced word over {x0, x1} evaluating to f. Throws
/// ContractViolation if f is not in F.
Word fNormalFormWord(const Element& f);

/// A word over all four generators evaluating to x. Built as a chain of F
/// words interleaved with single block moves realized by pi or by
/// c^-1 x0 (the half-interval swap).
Word synthesizeWord(const Element& x);

}  // namespace thompson

#endif  // THOMPSON_SYNTHESIS_H
