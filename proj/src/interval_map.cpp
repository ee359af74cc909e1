#include "thompson/interval_map.h"

#include <algorithm>
#include <stdexcept>

namespace thompson {

namespace {

void checkDepth(unsigned e) {
  if (e > DyadicInterval::kMaxDepth) {
    throw std::overflow_error("dyadic depth " + std::to_string(e) +
                              " exceeds exact 64-bit range");
  }
}

std::string fraction(std::uint64_t num, unsigned exp) {
  while (exp > 0 && num % 2 == 0) {
    num /= 2;
    --exp;
  }
  if (num == 0) return "0";
  if (exp == 0) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(std::uint64_t{1} << exp);
}

}  // namespace

DyadicInterval DyadicInterval::make(std::uint64_t numerator, unsigned exponent,
                                    unsigned widthExponent) {
  checkDepth(exponent);
  checkDepth(widthExponent);
  while (exponent > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --exponent;
  }
  if (numerator == 0) exponent = 0;
  return DyadicInterval{numerator, exponent, widthExponent};
}

std::uint64_t DyadicInterval::leftAt(unsigned e) const {
  checkDepth(e);
  return numerator << (e - exponent);
}

std::uint64_t DyadicInterval::rightAt(unsigned e) const {
  checkDepth(e);
  return leftAt(e) + (std::uint64_t{1} << (e - widthExponent));
}

std::string DyadicInterval::str() const {
  const unsigned e = std::max(exponent, widthExponent);
  return "[" + fraction(leftAt(e), e) + "," + fraction(rightAt(e), e) + ")";
}

bool adjacent(const DyadicInterval& a, const DyadicInterval& b) {
  const unsigned e = std::max({a.exponent, a.widthExponent, b.exponent});
  return a.rightAt(e) == b.leftAt(e);
}

std::vector<DyadicInterval> leafIntervals(const Tree& t) {
  const auto depths = t.leafDepths();
  std::vector<DyadicInterval> out;
  out.reserve(depths.size());
  const unsigned deepest =
      static_cast<unsigned>(*std::max_element(depths.begin(), depths.end()));
  checkDepth(deepest);
  // Left endpoints accumulate at the finest denominator 2^deepest.
  std::uint64_t left = 0;
  for (std::size_t d : depths) {
    out.push_back(DyadicInterval::make(left, deepest, static_cast<unsigned>(d)));
    left += std::uint64_t{1} << (deepest - d);
  }
  return out;
}

PiecewiseMap toIntervalMap(const Element& x) {
  const Element r = reduce(x);
  const auto source = leafIntervals(r.domain());
  const auto target = leafIntervals(r.range());
  PiecewiseMap m;
  m.pieces.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    m.pieces.push_back({source[i], target[r.perm().images()[i] - 1]});
  }
  return m;
}

std::size_t graphComponents(const PiecewiseMap& m) {
  if (m.pieces.empty()) throw std::invalid_argument("empty interval map");
  std::size_t components = 1;
  for (std::size_t i = 1; i < m.pieces.size(); ++i) {
    if (!adjacent(m.pieces[i - 1].target, m.pieces[i].target)) ++components;
  }
  return components;
}

}  // namespace thompson
