#include "thompson/tree.h"

#include "text_cursor.h"

namespace thompson {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what), offset_(offset) {}

std::size_t subtreeEnd(std::string_view code, std::size_t pos) {
  std::size_t need = 1;
  while (pos < code.size()) {
    if (code[pos++] == '1') {
      ++need;
    } else if (--need == 0) {
      return pos;
    }
  }
  throw std::invalid_argument("truncated tree code");
}

Tree::Tree() : code_("0") {}

Tree Tree::caret(const Tree& left, const Tree& right) {
  std::string code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back('1');
  code += left.code_;
  code += right.code_;
  return Tree(std::move(code));
}

Tree Tree::rightComb(std::size_t carets) {
  std::string code;
  code.reserve(2 * carets + 1);
  for (std::size_t i = 0; i < carets; ++i) code += "10";
  code.push_back('0');
  return Tree(std::move(code));
}

Tree Tree::fromCode(std::string code) {
  for (char c : code) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("tree code must contain only '0' and '1'");
    }
  }
  if (code.empty() || subtreeEnd(code, 0) != code.size()) {
    throw std::invalid_argument("tree code is not a single full binary tree");
  }
  return Tree(std::move(code));
}

Tree Tree::parse(std::string_view text) {
  detail::TextCursor cursor(text);
  std::string code;
  cursor.readTree(code);
  if (!cursor.atEnd()) cursor.fail("trailing characters after tree");
  return Tree(std::move(code));
}

Tree Tree::left() const {
  if (isLeaf()) throw std::logic_error("a leaf has no children");
  return Tree(code_.substr(1, subtreeEnd(code_, 1) - 1));
}

Tree Tree::right() const {
  if (isLeaf()) throw std::logic_error("a leaf has no children");
  return Tree(code_.substr(subtreeEnd(code_, 1)));
}

std::vector<std::size_t> Tree::leafDepths() const {
  std::vector<std::size_t> depths;
  depths.reserve(leafCount());
  // Each entry is the depth of a subtree still to be visited.
  std::vector<std::size_t> todo{0};
  for (char c : code_) {
    const std::size_t d = todo.back();
    todo.pop_back();
    if (c == '1') {
      todo.push_back(d + 1);
      todo.push_back(d + 1);
    } else {
      depths.push_back(d);
    }
  }
  return depths;
}

std::vector<std::size_t> Tree::leafOffsets() const {
  std::vector<std::size_t> offsets;
  offsets.reserve(leafCount());
  for (std::size_t p = 0; p < code_.size(); ++p) {
    if (code_[p] == '0') offsets.push_back(p);
  }
  return offsets;
}

namespace {

std::size_t leafOffset(const std::string& code, std::size_t leaf) {
  if (leaf == 0) throw std::out_of_range("leaf indices are 1-based");
  for (std::size_t p = 0; p < code.size(); ++p) {
    if (code[p] == '0' && --leaf == 0) return p;
  }
  throw std::out_of_range("leaf index exceeds leaf count");
}

}  // namespace

bool Tree::siblingLeaves(std::size_t i) const {
  if (i == 0 || i + 1 > leafCount()) return false;
  const std::size_t p = leafOffset(code_, i);
  // A caret whose code reads "100" has two leaf children.
  return p >= 1 && code_[p - 1] == '1' && code_[p + 1] == '0';
}

Tree Tree::graft(std::size_t i, const Tree& subtree) const {
  std::string code = code_;
  code.replace(leafOffset(code_, i), 1, subtree.code_);
  return Tree(std::move(code));
}

Tree Tree::contract(std::size_t i) const {
  if (!siblingLeaves(i)) {
    throw std::invalid_argument("leaves " + std::to_string(i) + " and " +
                                std::to_string(i + 1) + " are not siblings");
  }
  std::string code = code_;
  code.replace(leafOffset(code_, i) - 1, 3, "0");
  return Tree(std::move(code));
}

std::string Tree::str() const {
  std::string out;
  out.reserve(2 * code_.size());
  // Same bookkeeping as the parser: 'L' while the left child is pending.
  std::string open;
  for (char c : code_) {
    if (c == '1') {
      out.push_back('(');
      open.push_back('L');
      continue;
    }
    out.push_back('.');
    while (!open.empty()) {
      if (open.back() == 'L') {
        out.push_back(',');
        open.back() = 'R';
        break;
      }
      out.push_back(')');
      open.pop_back();
    }
  }
  return out;
}

}  // namespace thompson
