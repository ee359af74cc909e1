#include <doctest.h>

#include <algorithm>
#include <string>

#include "thompson/errors.h"
#include "thompson/experiments.h"
#include "thompson/synthesis.h"

using namespace thompson;

namespace {

std::string repeat(const std::string& s, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += s;
  return out;
}

std::size_t rightSpineCarets(Tree t) {
  std::size_t k = 0;
  while (!t.isLeaf()) {
    ++k;
    t = t.right();
  }
  return k;
}

}  // namespace

TEST_CASE("spine generators match explicit rotations") {
  for (std::size_t k = 0; k <= 8; ++k) {
    // Spine node k rotated: (B,(C,D)) -> ((B,C),D) below k leaves.
    const Element expected(Tree::fromCode(repeat("10", k) + "10100"),
                           Tree::fromCode(repeat("10", k) + "11000"),
                           Permutation::identity(k + 3));
    CHECK(evaluateWord(spineGeneratorWord(k, 1)) == expected);
    CHECK(evaluateWord(spineGeneratorWord(k, -1)) == invert(expected));
  }
  CHECK(toString(spineGeneratorWord(1, 1)) == "x1");
  CHECK(toString(spineGeneratorWord(3, -1)) == "x0 x0 x1^-1 x0^-1 x0^-1");
}

TEST_CASE("rotations to the right comb") {
  CHECK(spineRotationsToComb(Tree::rightComb(4)).empty());
  CHECK(spineRotationsToComb(Tree::parse("((.,.),.)")) == std::vector<std::size_t>{0});
  std::mt19937_64 rng(31);
  for (std::size_t carets = 0; carets <= 14; ++carets) {
    for (int rep = 0; rep < 10; ++rep) {
      const Tree t = experiments::randomTree(carets, rng);
      const auto rot = spineRotationsToComb(t);
      CHECK(std::is_sorted(rot.begin(), rot.end()));
      CHECK(rot.size() == carets - rightSpineCarets(t));
      Word w;
      for (std::size_t k : rot) {
        const Word step = spineGeneratorWord(k, -1);
        w.insert(w.end(), step.begin(), step.end());
      }
      CHECK(evaluateWord(w) ==
            reduce(Element(t, Tree::rightComb(carets), Permutation::identity(carets + 1))));
    }
  }
}

TEST_CASE("normal form words in F") {
  CHECK(fNormalFormWord(Element()).empty());
  CHECK(toString(fNormalFormWord(standardGenerators()[0])) == "x0");
  CHECK(toString(fNormalFormWord(standardGenerators()[1])) == "x1");
  CHECK(fNormalFormWord(evaluateWord(parseWord("x0 x0"))).size() == 2);
  CHECK_THROWS_AS(fNormalFormWord(standardGenerators()[2]), ContractViolation);
  CHECK_THROWS_AS(fNormalFormWord(standardGenerators()[3]), ContractViolation);
}

TEST_CASE("normal form round trip and length bound") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Element f = experiments::randomFElement(seed % 16, seed);
    const Word w = fNormalFormWord(f);
    CHECK(evaluateWord(w) == f);
    CHECK(toString(freeReduce(w)) == toString(w));
    CHECK(w.size() <= kFWordLengthFactor * std::max<std::size_t>(1, caretCount(f)));
    for (const auto& s : w) {
      CHECK((s.generator == Generator::X0 || s.generator == Generator::X1));
    }
  }
}

TEST_CASE("synthesized words evaluate to their element") {
  CHECK(synthesizeWord(Element()).empty());
  CHECK(evaluateWord(synthesizeWord(standardGenerators()[2])) == standardGenerators()[2]);
  CHECK(evaluateWord(synthesizeWord(standardGenerators()[3])) == standardGenerators()[3]);
  const Element swap = Element::parse("(.,.)|(.,.)|[2,1]");
  CHECK(evaluateWord(synthesizeWord(swap)) == swap);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Element x = experiments::randomElement(seed % 13, seed);
    const Word w = synthesizeWord(x);
    CHECK(evaluateWord(w) == x);
    CHECK(toString(freeReduce(w)) == toString(w));
    // Unreduced input names the same element.
    CHECK(evaluateWord(synthesizeWord(expandAt(x, 1))) == x);
  }
}

TEST_CASE("synthesis agrees with the normal form on F") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Element f = experiments::randomFElement(seed % 12, seed);
    CHECK(toString(synthesizeWord(f)) == toString(fNormalFormWord(f)));
  }
}
