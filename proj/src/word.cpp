#include "thompson/word.h"

#include <cctype>
#include <stdexcept>

namespace thompson {

namespace {

constexpr std::array<std::string_view, 4> kNames{"x0", "x1", "c", "pi"};

std::array<Element, 8> buildSymbolElements() {
  const auto& g = standardGenerators();
  std::array<Element, 8> out;
  for (unsigned k = 0; k < 4; ++k) {
    out[2 * k] = g[k];
    out[2 * k + 1] = invert(g[k]);
  }
  return out;
}

}  // namespace

GeneratorSymbol GeneratorSymbol::fromIndex(unsigned index) {
  if (index >= 8) throw std::out_of_range("generator symbol index");
  return {static_cast<Generator>(index / 2), index % 2 == 0 ? 1 : -1};
}

const std::array<Element, 4>& standardGenerators() {
  static const std::array<Element, 4> generators{
      Element::parse("(.,(.,.))|((.,.),.)|[1,2,3]"),
      Element::parse("(.,(.,(.,.)))|(.,((.,.),.))|[1,2,3,4]"),
      Element::parse("(.,(.,.))|(.,(.,.))|[2,3,1]"),
      Element::parse("(.,(.,.))|(.,(.,.))|[2,1,3]"),
  };
  return generators;
}

std::string generatorSetDescription() {
  const auto& g = standardGenerators();
  std::string out;
  for (unsigned k = 0; k < 4; ++k) {
    if (k > 0) out += "; ";
    out += std::string(kNames[k]) + "=" + g[k].str();
  }
  return out;
}

const Element& symbolElement(GeneratorSymbol s) {
  static const std::array<Element, 8> elements = buildSymbolElements();
  return elements[s.index()];
}

std::array<GeneratorSymbol, 8> allSymbols() {
  std::array<GeneratorSymbol, 8> out;
  for (unsigned k = 0; k < 8; ++k) out[k] = GeneratorSymbol::fromIndex(k);
  return out;
}

Element evaluateWord(const Word& w) {
  Element acc;
  for (const auto& s : w) acc = multiply(acc, symbolElement(s));
  return acc;
}

Word parseWord(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  auto isSpace = [&](std::size_t p) {
    return std::isspace(static_cast<unsigned char>(text[p])) != 0;
  };
  while (true) {
    while (pos < text.size() && isSpace(pos)) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !isSpace(pos)) ++pos;
    std::string_view token = text.substr(start, pos - start);
    int exponent = 1;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      const std::string_view exp = token.substr(caret + 1);
      if (exp == "-1") {
        exponent = -1;
      } else if (exp != "1") {
        throw ParseError("bad exponent '" + std::string(exp) +
                             "' at offset " + std::to_string(start + caret + 1),
                         start + caret + 1);
      }
      token = token.substr(0, caret);
    }
    bool found = false;
    for (unsigned k = 0; k < 4; ++k) {
      if (token == kNames[k]) {
        w.push_back({static_cast<Generator>(k), exponent});
        found = true;
        break;
      }
    }
    if (!found) {
      throw ParseError("unknown generator '" + std::string(token) +
                           "' at offset " + std::to_string(start),
                       start);
    }
  }
  return w;
}

std::string toString(GeneratorSymbol s) {
  std::string out(kNames[static_cast<unsigned>(s.generator)]);
  if (s.exponent < 0) out += "^-1";
  return out;
}

std::string toString(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out.push_back(' ');
    out += toString(w[k]);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word freeReduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& s : w) {
    if (!out.empty() && out.back() == s.inverse()) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Word power(GeneratorSymbol g, long count) {
  const GeneratorSymbol unit = count < 0 ? g.inverse() : g;
  return Word(static_cast<std::size_t>(count < 0 ? -count : count), unit);
}

}  // namespace thompson
