#include "thompson/synthesis.h"

#include <algorithm>

#include "thompson/errors.h"

namespace thompson {

namespace {

constexpr GeneratorSymbol kX0{Generator::X0, 1};
constexpr GeneratorSymbol kX1{Generator::X1, 1};
constexpr GeneratorSymbol kPi{Generator::Pi, 1};
constexpr GeneratorSymbol kCInv{Generator::C, -1};

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

// Word for (from, to, identity).
Word fWordBetween(const Tree& from, const Tree& to) {
  const auto down = spineRotationsToComb(from);
  const auto up = spineRotationsToComb(to);
  Word w;
  for (std::size_t k : down) append(w, spineGeneratorWord(k, -1));
  for (auto it = up.rbegin(); it != up.rend(); ++it) {
    append(w, spineGeneratorWord(*it, 1));
  }
  return freeReduce(w);
}

}  // namespace

std::vector<std::size_t> spineRotationsToComb(const Tree& t) {
  std::string code = t.code();
  std::vector<std::size_t> rotations;
  std::size_t pos = 0;
  std::size_t spine = 0;
  while (code[pos] == '1') {
    if (code[pos + 1] == '0') {
      // Left child is a leaf; the right child starts right after it.
      pos += 2;
      ++spine;
      continue;
    }
    // 1 [1 A B] C  ->  1 A [1 B C]
    const std::size_t aBegin = pos + 2;
    const std::size_t aEnd = subtreeEnd(code, aBegin);
    const std::size_t bEnd = subtreeEnd(code, aEnd);
    code.replace(pos, bEnd - pos,
                 "1" + code.substr(aBegin, aEnd - aBegin) + "1" +
                     code.substr(aEnd, bEnd - aEnd));
    rotations.push_back(spine);
  }
  return rotations;
}

Word spineGeneratorWord(std::size_t k, int exponent) {
  const GeneratorSymbol x1 = exponent < 0 ? kX1.inverse() : kX1;
  if (k == 0) return {exponent < 0 ? kX0.inverse() : kX0};
  const long shift = static_cast<long>(k) - 1;
  Word w = power(kX0, shift);
  w.push_back(x1);
  append(w, power(kX0, -shift));
  return w;
}

Word fNormalFormWord(const Element& f) {
  const Element r = reduce(f);
  if (!r.perm().isIdentity()) {
    throw ContractViolation("element is not in F: " + r.str());
  }
  return fWordBetween(r.domain(), r.range());
}

Word synthesizeWord(const Element& input) {
  const Element x = reduce(input);
  const std::size_t n = x.leafCount();
  const Permutation sigmaInv = x.perm().inverse();

  // Sort items into their target positions by repeatedly moving one leaf to
  // the front, last target first. Items whose targets form a suffix already
  // in order never need to move.
  std::size_t last = n - 1;
  while (last >= 1 && sigmaInv(last) < sigmaInv(last + 1)) --last;
  std::vector<std::size_t> at(n);  // at[pos] = item, 0-based
  for (std::size_t k = 0; k < n; ++k) at[k] = k;
  std::vector<std::size_t> moves;  // 1-based position moved to the front
  for (std::size_t p = last; p >= 1; --p) {
    const std::size_t item = sigmaInv(p) - 1;
    const auto it = std::find(at.begin(), at.end(), item);
    const std::size_t j = static_cast<std::size_t>(it - at.begin()) + 1;
    if (j > 1) {
      moves.push_back(j);
      at.erase(it);
      at.insert(at.begin(), item);
    }
  }

  Word w;
  Tree current = x.domain();
  for (std::size_t j : moves) {
    if (j < n) {
      // pi on (X,(Y,Z)) with |X| = j-1, |Y| = 1 swaps the blocks X and Y.
      const Tree xs = Tree::rightComb(j - 2);
      const Tree zs = Tree::rightComb(n - j - 1);
      const Tree before = Tree::caret(xs, Tree::caret(Tree::leaf(), zs));
      append(w, fWordBetween(current, before));
      w.push_back(kPi);
      current = Tree::caret(Tree::leaf(), Tree::caret(xs, zs));
    } else {
      // c^-1 x0 is the half-interval swap; on (X, leaf) it moves the last
      // leaf to the front.
      const Tree xs = Tree::rightComb(n - 2);
      append(w, fWordBetween(current, Tree::caret(xs, Tree::leaf())));
      w.push_back(kCInv);
      w.push_back(kX0);
      current = Tree::caret(Tree::leaf(), xs);
    }
  }
  append(w, fWordBetween(current, x.range()));
  return freeReduce(w);
}

}  // namespace thompson
