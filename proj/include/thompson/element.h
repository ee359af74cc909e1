#ifndef THOMPSON_ELEMENT_H
#define THOMPSON_ELEMENT_H

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/permutation.h"
#include "thompson/tree.h"

namespace thompson {

/// A tree-pair diagram for an element of Thompson's group V: leaf i of the
/// domain tree maps affinely, preserving orientation, onto leaf perm(i) of
/// the range tree. The diagram need not be reduced; `==` compares diagrams
/// structurally, `equals` compares group elements.
class Element {
 public:
  /// The identity, (Leaf, Leaf, [1]).
  Element() = default;
  /// Throws std::invalid_argument unless both trees have perm.degree() leaves.
  Element(Tree domain, Tree range, Permutation perm);

  static Element identity() { return Element(); }
  /// Grammar: tree "|" tree "|" perm, whitespace ignored.
  static Element parse(std::string_view text);

  const Tree& domain() const { return domain_; }
  const Tree& range() const { return range_; }
  const Permutation& perm() const { return perm_; }
  std::size_t leafCount() const { return perm_.degree(); }

  /// Canonical text, e.g. "(.,.)|(.,.)|[2,1]".
  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Tree domain_;
  Tree range_;
  Permutation perm_;
};

/// Compact binary encoding of the diagram: both shape codes packed as bits,
/// then the permutation images as varints. Injective on diagrams.
std::string canonicalKey(const Element& x);

/// Domain leaves i where one reduction step applies (1-based): leaves i, i+1
/// are siblings in the domain, perm(i+1) = perm(i)+1, and range leaves
/// perm(i), perm(i)+1 are siblings.
std::vector<std::size_t> reducibleLeaves(const Element& x);
/// Performs the reduction step at domain leaf i. Throws
/// std::invalid_argument if it does not apply.
Element contractAt(const Element& x, std::size_t i);
/// Adds a caret under domain leaf i and under its image; the inverse of
/// contractAt.
Element expandAt(const Element& x, std::size_t i);

bool isReduced(const Element& x);
/// The unique reduced diagram of x. Applies the leftmost reduction step
/// until none remains.
Element reduce(const Element& x);

/// Apply `a` first, then `b`. Result is reduced.
Element multiply(const Element& a, const Element& b);
Element invert(const Element& x);
/// True iff a and b are the same group element.
bool equals(const Element& a, const Element& b);

/// N(x): carets in one tree of the reduced diagram.
std::size_t caretCount(const Element& x);
/// B(x): number of clusters of the reduced permutation.
std::size_t clusterCount(const Element& x);

bool inF(const Element& x);
bool inT(const Element& x);

}  // namespace thompson

template <>
struct std::hash<thompson::Element> {
  std::size_t operator()(const thompson::Element& x) const noexcept {
    return std::hash<std::string>{}(thompson::canonicalKey(x));
  }
};

#endif  // THOMPSON_ELEMENT_H
