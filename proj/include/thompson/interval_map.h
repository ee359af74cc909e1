#ifndef THOMPSON_INTERVAL_MAP_H
#define THOMPSON_INTERVAL_MAP_H

#include <cstdint>
#include <string>
#include <vector>

#include "thompson/element.h"
#include "thompson/tree.h"

namespace thompson {

/// [numerator/2^exponent, numerator/2^exponent + 1/2^widthExponent).
/// The left endpoint is kept in lowest terms (odd numerator, or 0/2^0).
/// Exact integer arithmetic; depths beyond kMaxDepth raise
/// std::overflow_error.
struct DyadicInterval {
  static constexpr unsigned kMaxDepth = 62;

  std::uint64_t numerator = 0;
  unsigned exponent = 0;
  unsigned widthExponent = 0;

  /// Builds from left = numerator/2^exponent, normalizing the fraction.
  static DyadicInterval make(std::uint64_t numerator, unsigned exponent,
                             unsigned widthExponent);

  /// Left endpoint scaled to denominator 2^e (e >= exponent).
  std::uint64_t leftAt(unsigned e) const;
  /// Right endpoint scaled to denominator 2^e (e >= widthExponent).
  std::uint64_t rightAt(unsigned e) const;

  /// e.g. "[1/2,3/4)".
  std::string str() const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

/// True when a's right endpoint equals b's left endpoint.
bool adjacent(const DyadicInterval& a, const DyadicInterval& b);

/// Leaf intervals of the standard dyadic subdivision, left to right.
std::vector<DyadicInterval> leafIntervals(const Tree& t);

struct MapPiece {
  DyadicInterval source;
  DyadicInterval target;

  friend bool operator==(const MapPiece&, const MapPiece&) = default;
};

/// The right-continuous map of [0,1) given by an element, one affine piece
/// per leaf of its reduced diagram.
struct PiecewiseMap {
  std::vector<MapPiece> pieces;
};

PiecewiseMap toIntervalMap(const Element& x);

/// Number of connected components of the closure of the graph: consecutive
/// pieces belong to one component when the first target ends where the
/// next one starts.
std::size_t graphComponents(const PiecewiseMap& m);

}  // namespace thompson

#endif  // THOMPSON_INTERVAL_MAP_H
