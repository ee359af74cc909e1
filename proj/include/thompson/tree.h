#ifndef THOMPSON_TREE_H
#define THOMPSON_TREE_H

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

/// Raised by the text parsers. `offset()` is the byte offset of the first
/// character that could not be consumed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A full ordered binary tree. Internal nodes are carets; leaves are
/// numbered 1..leafCount() from left to right.
///
/// The tree is stored as its preorder shape code: '1' for a caret, '0' for a
/// leaf. The code of a full binary tree is prefix-free, so it is a canonical
/// key and concatenations of codes can be split unambiguously.
class Tree {
 public:
  /// A single leaf.
  Tree();

  static Tree leaf() { return Tree(); }
  static Tree caret(const Tree& left, const Tree& right);
  /// Every left child is a leaf; `carets == 0` gives a leaf.
  static Tree rightComb(std::size_t carets);
  /// Builds from a preorder shape code; throws std::invalid_argument if the
  /// code is not a complete full binary tree.
  static Tree fromCode(std::string code);
  /// Grammar: tree := "." | "(" tree "," tree ")", whitespace ignored.
  static Tree parse(std::string_view text);

  bool isLeaf() const { return code_.size() == 1; }
  /// Children of the root caret. Throws std::logic_error on a leaf.
  Tree left() const;
  Tree right() const;

  std::size_t leafCount() const { return (code_.size() + 1) / 2; }
  std::size_t caretCount() const { return code_.size() / 2; }

  /// Depth of each leaf, left to right. The root has depth 0.
  std::vector<std::size_t> leafDepths() const;
  /// Position in code() of each leaf, left to right.
  std::vector<std::size_t> leafOffsets() const;

  /// True if leaves i and i+1 (1-based) are the two children of one caret.
  bool siblingLeaves(std::size_t i) const;

  /// Replaces leaf i (1-based) by `subtree`.
  Tree graft(std::size_t i, const Tree& subtree) const;
  /// Replaces leaf i by a single caret.
  Tree expand(std::size_t i) const { return graft(i, caret(leaf(), leaf())); }
  /// Inverse of expand: leaves i and i+1 must be siblings.
  Tree contract(std::size_t i) const;

  const std::string& code() const { return code_; }
  std::string str() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.code_ <=> b.code_;
  }

 private:
  explicit Tree(std::string code) : code_(std::move(code)) {}

  std::string code_;
};

/// End position (exclusive) of the subtree whose code starts at `pos`.
std::size_t subtreeEnd(std::string_view code, std::size_t pos);

}  // namespace thompson

template <>
struct std::hash<thompson::Tree> {
  std::size_t operator()(const thompson::Tree& t) const noexcept {
    return std::hash<std::string>{}(t.code());
  }
};

#endif  // THOMPSON_TREE_H
