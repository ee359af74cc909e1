#include "thompson/element.h"

#include <algorithm>
#include <stdexcept>

#include "text_cursor.h"

namespace thompson {

Element::Element(Tree domain, Tree range, Permutation perm)
    : domain_(std::move(domain)), range_(std::move(range)), perm_(std::move(perm)) {
  if (domain_.leafCount() != perm_.degree() ||
      range_.leafCount() != perm_.degree()) {
    throw std::invalid_argument(
        "diagram leaf counts disagree: domain " +
        std::to_string(domain_.leafCount()) + ", range " +
        std::to_string(range_.leafCount()) + ", permutation " +
        std::to_string(perm_.degree()));
  }
}

Element Element::parse(std::string_view text) {
  detail::TextCursor cursor(text);
  std::string domain;
  std::string range;
  cursor.readTree(domain);
  cursor.expect('|');
  cursor.readTree(range);
  cursor.expect('|');
  const std::size_t permAt = cursor.pos();
  Permutation perm = detail::readPermutation(cursor);
  if (!cursor.atEnd()) cursor.fail("trailing characters after element");
  try {
    return Element(Tree::fromCode(std::move(domain)),
                   Tree::fromCode(std::move(range)), std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " at offset " +
                         std::to_string(permAt),
                     permAt);
  }
}

std::string Element::str() const {
  return domain_.str() + "|" + range_.str() + "|" + perm_.str();
}

std::string canonicalKey(const Element& x) {
  std::string key;
  const std::string& d = x.domain().code();
  const std::string& r = x.range().code();
  const std::size_t bits = d.size() + r.size();
  key.reserve((bits + 7) / 8 + x.leafCount() * 2);
  unsigned char acc = 0;
  std::size_t filled = 0;
  auto push = [&](char c) {
    acc = static_cast<unsigned char>((acc << 1) | (c == '1' ? 1 : 0));
    if (++filled == 8) {
      key.push_back(static_cast<char>(acc));
      acc = 0;
      filled = 0;
    }
  };
  for (char c : d) push(c);
  for (char c : r) push(c);
  if (filled > 0) key.push_back(static_cast<char>(acc << (8 - filled)));
  for (std::uint32_t v : x.perm().images()) {
    while (v >= 0x80) {
      key.push_back(static_cast<char>((v & 0x7f) | 0x80));
      v >>= 7;
    }
    key.push_back(static_cast<char>(v));
  }
  return key;
}

namespace {

// Mutable working copy of a diagram used by the reduction loop.
struct Workspace {
  std::string domain;
  std::string range;
  std::vector<std::uint32_t> images;
  std::vector<std::size_t> domainLeaf;
  std::vector<std::size_t> rangeLeaf;

  explicit Workspace(const Element& x)
      : domain(x.domain().code()),
        range(x.range().code()),
        images(x.perm().images().begin(), x.perm().images().end()) {
    index();
  }

  void index() {
    domainLeaf.clear();
    rangeLeaf.clear();
    for (std::size_t p = 0; p < domain.size(); ++p) {
      if (domain[p] == '0') domainLeaf.push_back(p);
    }
    for (std::size_t p = 0; p < range.size(); ++p) {
      if (range[p] == '0') rangeLeaf.push_back(p);
    }
  }

  static bool siblings(const std::string& code, std::size_t offset) {
    return offset >= 1 && code[offset - 1] == '1' && offset + 1 < code.size() &&
           code[offset + 1] == '0';
  }

  // Step at 0-based domain leaf k (leaves k and k+1).
  bool applies(std::size_t k) const {
    if (k + 1 >= images.size()) return false;
    if (images[k + 1] != images[k] + 1) return false;
    return siblings(domain, domainLeaf[k]) &&
           siblings(range, rangeLeaf[images[k] - 1]);
  }

  void contract(std::size_t k) {
    const std::uint32_t target = images[k];
    domain.replace(domainLeaf[k] - 1, 3, "0");
    range.replace(rangeLeaf[target - 1] - 1, 3, "0");
    images.erase(images.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    for (auto& v : images) {
      if (v > target) --v;
    }
    index();
  }

  Element finish() && {
    return Element(Tree::fromCode(std::move(domain)),
                   Tree::fromCode(std::move(range)),
                   Permutation::fromImages(std::move(images)));
  }
};

}  // namespace

std::vector<std::size_t> reducibleLeaves(const Element& x) {
  const Workspace w(x);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < w.images.size(); ++k) {
    if (w.applies(k)) out.push_back(k + 1);
  }
  return out;
}

Element contractAt(const Element& x, std::size_t i) {
  Workspace w(x);
  if (i == 0 || !w.applies(i - 1)) {
    throw std::invalid_argument("no reduction step at leaf " +
                                std::to_string(i));
  }
  w.contract(i - 1);
  return std::move(w).finish();
}

Element expandAt(const Element& x, std::size_t i) {
  if (i == 0 || i > x.leafCount()) {
    throw std::out_of_range("leaf index out of range");
  }
  const std::size_t target = x.perm()(i);
  std::vector<std::uint32_t> images;
  images.reserve(x.leafCount() + 1);
  for (std::size_t k = 1; k <= x.leafCount(); ++k) {
    std::uint32_t v = static_cast<std::uint32_t>(x.perm()(k));
    if (v > target) ++v;
    images.push_back(v);
    if (k == i) images.push_back(v + 1);
  }
  return Element(x.domain().expand(i), x.range().expand(target),
                 Permutation::fromImages(std::move(images)));
}

bool isReduced(const Element& x) {
  const Workspace w(x);
  for (std::size_t k = 0; k + 1 < w.images.size(); ++k) {
    if (w.applies(k)) return false;
  }
  return true;
}

Element reduce(const Element& x) {
  Workspace w(x);
  bool changed = false;
  std::size_t k = 0;
  // A contraction at k can only enable new steps at k-1 or k, so the scan
  // resumes one position back and stays leftmost-first.
  while (k + 1 < w.images.size()) {
    if (w.applies(k)) {
      w.contract(k);
      changed = true;
      k = k > 0 ? k - 1 : 0;
    } else {
      ++k;
    }
  }
  if (!changed) return x;
  return std::move(w).finish();
}

namespace {

// Common refinement of two trees. For each leaf of `a` (resp. `b`), the
// subtree of the union tree hanging below it.
struct Refinement {
  std::vector<std::string> belowA;
  std::vector<std::string> belowB;
  std::string unionCode;
};

Refinement refine(const std::string& a, const std::string& b) {
  Refinement out;
  std::size_t pa = 0;
  std::size_t pb = 0;
  while (pa < a.size()) {
    if (a[pa] == '1' && b[pb] == '1') {
      out.unionCode.push_back('1');
      ++pa;
      ++pb;
    } else if (a[pa] == '0' && b[pb] == '0') {
      out.unionCode.push_back('0');
      out.belowA.emplace_back("0");
      out.belowB.emplace_back("0");
      ++pa;
      ++pb;
    } else if (a[pa] == '0') {
      const std::size_t end = subtreeEnd(b, pb);
      out.belowA.push_back(b.substr(pb, end - pb));
      out.unionCode += out.belowA.back();
      for (std::size_t p = pb; p < end; ++p) {
        if (b[p] == '0') out.belowB.emplace_back("0");
      }
      ++pa;
      pb = end;
    } else {
      const std::size_t end = subtreeEnd(a, pa);
      out.belowB.push_back(a.substr(pa, end - pa));
      out.unionCode += out.belowB.back();
      for (std::size_t p = pa; p < end; ++p) {
        if (a[p] == '0') out.belowA.emplace_back("0");
      }
      ++pb;
      pa = end;
    }
  }
  return out;
}

std::size_t leavesOf(const std::string& code) { return (code.size() + 1) / 2; }

// Replaces leaf k of `code` by below[pick(k)] for every leaf.
template <typename Pick>
std::string substitute(const std::string& code,
                       const std::vector<std::string>& below, Pick pick) {
  std::string out;
  std::size_t k = 0;
  for (char c : code) {
    if (c == '1') {
      out.push_back('1');
    } else {
      out += below[pick(k++)];
    }
  }
  return out;
}

std::vector<std::size_t> blockStarts(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> starts(sizes.size());
  std::size_t acc = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    starts[k] = acc;
    acc += sizes[k];
  }
  return starts;
}

}  // namespace

Element multiply(const Element& a, const Element& b) {
  const Refinement r = refine(a.range().code(), b.domain().code());
  const auto sigma = a.perm().images();
  const auto tau = b.perm().images();
  const std::size_t total = leavesOf(r.unionCode);

  // a expanded: domain leaf i carries the subtree below range leaf sigma(i).
  std::vector<std::size_t> aRangeSizes(r.belowA.size());
  for (std::size_t j = 0; j < r.belowA.size(); ++j) {
    aRangeSizes[j] = leavesOf(r.belowA[j]);
  }
  std::vector<std::size_t> aDomainSizes(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    aDomainSizes[i] = aRangeSizes[sigma[i] - 1];
  }
  const auto aRangeStart = blockStarts(aRangeSizes);
  const auto aDomainStart = blockStarts(aDomainSizes);
  std::vector<std::uint32_t> middleOf(total);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t t = 0; t < aDomainSizes[i]; ++t) {
      middleOf[aDomainStart[i] + t] =
          static_cast<std::uint32_t>(aRangeStart[sigma[i] - 1] + t);
    }
  }
  std::string domain = substitute(a.domain().code(), r.belowA,
                                  [&](std::size_t i) { return sigma[i] - 1; });

  // b expanded: range leaf tau(k) carries the subtree below domain leaf k.
  const Permutation bInverse = b.perm().inverse();
  const auto tauInv = bInverse.images();
  std::vector<std::size_t> bDomainSizes(r.belowB.size());
  for (std::size_t k = 0; k < r.belowB.size(); ++k) {
    bDomainSizes[k] = leavesOf(r.belowB[k]);
  }
  std::vector<std::size_t> bRangeSizes(tau.size());
  for (std::size_t j = 0; j < tau.size(); ++j) {
    bRangeSizes[j] = bDomainSizes[tauInv[j] - 1];
  }
  const auto bDomainStart = blockStarts(bDomainSizes);
  const auto bRangeStart = blockStarts(bRangeSizes);
  std::vector<std::uint32_t> rangeOf(total);
  for (std::size_t k = 0; k < tau.size(); ++k) {
    for (std::size_t t = 0; t < bDomainSizes[k]; ++t) {
      rangeOf[bDomainStart[k] + t] =
          static_cast<std::uint32_t>(bRangeStart[tau[k] - 1] + t);
    }
  }
  std::string range = substitute(b.range().code(), r.belowB,
                                 [&](std::size_t j) { return tauInv[j] - 1; });

  std::vector<std::uint32_t> images(total);
  for (std::size_t i = 0; i < total; ++i) {
    images[i] = rangeOf[middleOf[i]] + 1;
  }
  return reduce(Element(Tree::fromCode(std::move(domain)),
                        Tree::fromCode(std::move(range)),
                        Permutation::fromImages(std::move(images))));
}

Element invert(const Element& x) {
  return Element(x.range(), x.domain(), x.perm().inverse());
}

bool equals(const Element& a, const Element& b) {
  return reduce(a) == reduce(b);
}

std::size_t caretCount(const Element& x) {
  return reduce(x).domain().caretCount();
}

std::size_t clusterCount(const Element& x) {
  return clusterPartition(reduce(x).perm()).count();
}

bool inF(const Element& x) { return reduce(x).perm().isIdentity(); }

bool inT(const Element& x) { return reduce(x).perm().rotation().has_value(); }

}  // namespace thompson
