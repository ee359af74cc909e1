#ifndef THOMPSON_SRC_TEXT_CURSOR_H
#define THOMPSON_SRC_TEXT_CURSOR_H

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "thompson/permutation.h"
#include "thompson/tree.h"

namespace thompson::detail {

// Whitespace-skipping reader shared by the element and tree parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool atEnd() {
    skipSpace();
    return pos_ >= text_.size();
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  // Appends the preorder shape code of one tree.
  void readTree(std::string& code) {
    // Iterative so deep combs cannot exhaust the stack. Each open caret
    // records whether its left subtree is already complete.
    std::string open;
    for (;;) {
      const char c = peek();
      if (c == '(') {
        ++pos_;
        code.push_back('1');
        open.push_back('L');
        continue;
      }
      if (c != '.') fail("expected '.' or '('");
      ++pos_;
      code.push_back('0');
      // A subtree just completed; close every caret it finishes.
      for (;;) {
        if (open.empty()) return;
        if (open.back() == 'L') {
          expect(',');
          open.back() = 'R';
          break;
        }
        expect(')');
        open.pop_back();
      }
    }
  }

  unsigned long readUnsigned() {
    skipSpace();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const unsigned long digit = static_cast<unsigned long>(text_[pos_] - '0');
      if (value > (~0UL - digit) / 10) {
        pos_ = start;
        fail("integer out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Reads "[" int ("," int)* "]" and validates the bijection.
Permutation readPermutation(TextCursor& cursor);

}  // namespace thompson::detail

#endif  // THOMPSON_SRC_TEXT_CURSOR_H
