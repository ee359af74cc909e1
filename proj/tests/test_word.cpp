#include <doctest.h>

#include "oracle.h"
#include "thompson/word.h"

using namespace thompson;

namespace {

const Element& gen(Generator g) { return standardGenerators()[static_cast<int>(g)]; }

}  // namespace

TEST_CASE("generator diagrams") {
  CHECK(gen(Generator::X0).str() == "(.,(.,.))|((.,.),.)|[1,2,3]");
  CHECK(gen(Generator::X1).str() == "(.,(.,(.,.)))|(.,((.,.),.))|[1,2,3,4]");
  CHECK(gen(Generator::C).str() == "(.,(.,.))|(.,(.,.))|[2,3,1]");
  CHECK(gen(Generator::Pi).str() == "(.,(.,.))|(.,(.,.))|[2,1,3]");
  for (const auto& g : standardGenerators()) CHECK(isReduced(g));
  CHECK(inF(gen(Generator::X0)));
  CHECK(inF(gen(Generator::X1)));
  CHECK(inT(gen(Generator::C)));
  CHECK_FALSE(inT(gen(Generator::Pi)));
}

TEST_CASE("generator relations") {
  const Element& c = gen(Generator::C);
  const Element& pi = gen(Generator::Pi);
  CHECK(multiply(multiply(c, c), c) == Element());
  CHECK(multiply(pi, pi) == Element());
  CHECK(evaluateWord(parseWord("pi")) == evaluateWord(parseWord("pi^-1")));
  CHECK(evaluateWord(parseWord("c c")) == evaluateWord(parseWord("c^-1")));
  // c^-1 x0 is the swap of the two halves.
  CHECK(evaluateWord(parseWord("c^-1 x0")) == Element::parse("(.,.)|(.,.)|[2,1]"));
}

TEST_CASE("symbols") {
  const auto all = allSymbols();
  for (unsigned i = 0; i < 8; ++i) {
    CHECK(all[i].index() == i);
    CHECK(toString(GeneratorSymbol::fromIndex(i)) == toString(all[i]));
    CHECK(multiply(symbolElement(all[i]), symbolElement(all[i].inverse())) == Element());
  }
  CHECK_THROWS(GeneratorSymbol::fromIndex(8));
}

TEST_CASE("evaluate words") {
  CHECK(evaluateWord({}) == Element());
  CHECK(evaluateWord(parseWord("x0")) == gen(Generator::X0));
  CHECK(evaluateWord(parseWord("x0 x0^-1")) == Element());
  const Element x0x1 = evaluateWord(parseWord("x0 x1"));
  CHECK(oracle::actsAsComposite(x0x1, gen(Generator::X0), gen(Generator::X1)));
  // y_2 is y_1 conjugated by x0^2.
  const Element y1 = Element::parse("(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]");
  const Element y2 =
      Element::parse("(.,(.,(.,(.,(.,.)))))|(.,(.,(.,(.,(.,.)))))|[1,2,3,5,4,6]");
  const Element x0sq = evaluateWord(parseWord("x0 x0"));
  CHECK(multiply(multiply(x0sq, y1), invert(x0sq)) == y2);
}

TEST_CASE("word text") {
  CHECK(toString(parseWord("  x0 x1^-1\tc pi^1 ")) == "x0 x1^-1 c pi");
  CHECK(toString(Word{}).empty());
  CHECK(parseWord("").empty());
  CHECK_THROWS_AS(parseWord("x2"), ParseError);
  CHECK_THROWS_AS(parseWord("x0^2"), ParseError);
  CHECK_THROWS_AS(parseWord("x0^"), ParseError);
  const Word w = parseWord("x0 c^-1 pi x1");
  CHECK(toString(parseWord(toString(w))) == toString(w));
}

TEST_CASE("inverse, free reduction and powers") {
  const Word w = parseWord("x0 c^-1 pi x1");
  CHECK(toString(inverse(w)) == "x1^-1 pi^-1 c x0^-1");
  CHECK(multiply(evaluateWord(w), evaluateWord(inverse(w))) == Element());
  CHECK(toString(freeReduce(parseWord("x0 x1 x1^-1 x0^-1 c"))) == "c");
  CHECK(freeReduce(parseWord("pi pi^-1 x0^-1 x0")).empty());
  CHECK(toString(power({Generator::X0, 1}, 3)) == "x0 x0 x0");
  CHECK(toString(power({Generator::X0, 1}, -2)) == "x0^-1 x0^-1");
  CHECK(power({Generator::C, 1}, 0).empty());
}
