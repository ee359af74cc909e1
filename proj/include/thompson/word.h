#ifndef THOMPSON_WORD_H
#define THOMPSON_WORD_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/element.h"

namespace thompson {

enum class Generator : std::uint8_t { X0 = 0, X1 = 1, C = 2, Pi = 3 };

struct GeneratorSymbol {
  Generator generator = Generator::X0;
  /// +1 or -1.
  int exponent = 1;

  GeneratorSymbol inverse() const { return {generator, -exponent}; }
  /// Dense index 0..7: 2*generator + (exponent < 0).
  unsigned index() const {
    return 2U * static_cast<unsigned>(generator) + (exponent < 0 ? 1U : 0U);
  }
  static GeneratorSymbol fromIndex(unsigned index);

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

using Word = std::vector<GeneratorSymbol>;

/// The generating set {x0, x1, c, pi}:
///   x0 = (.,(.,.))     | ((.,.),.)     | [1,2,3]
///   x1 = (.,(.,(.,.))) | (.,((.,.),.)) | [1,2,3,4]
///   c  = (.,(.,.))     | (.,(.,.))     | [2,3,1]
///   pi = (.,(.,.))     | (.,(.,.))     | [2,1,3]
const std::array<Element, 4>& standardGenerators();
/// Human-readable description of the generating set, for report metadata.
std::string generatorSetDescription();

const Element& symbolElement(GeneratorSymbol s);
/// The eight symbols x0, x0^-1, x1, x1^-1, c, c^-1, pi, pi^-1 in index order.
std::array<GeneratorSymbol, 8> allSymbols();

/// Left-to-right product; the empty word is the identity.
Element evaluateWord(const Word& w);

/// Whitespace-separated symbols from {x0, x1, c, pi}, each optionally
/// suffixed "^-1" (or "^1").
Word parseWord(std::string_view text);
std::string toString(const Word& w);
std::string toString(GeneratorSymbol s);

Word inverse(const Word& w);
/// Cancels adjacent s s^-1 pairs.
Word freeReduce(const Word& w);
/// g^count, or (g^-1)^|count| when count < 0.
Word power(GeneratorSymbol g, long count);

}  // namespace thompson

#endif  // THOMPSON_WORD_H
