#include "thompson/permutation.h"

#include <numeric>
#include <stdexcept>

#include "text_cursor.h"

namespace thompson {

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1U);
  return Permutation(std::move(images));
}

Permutation Permutation::fromImages(std::vector<std::uint32_t> images) {
  if (images.empty()) {
    throw std::invalid_argument("permutation degree must be >= 1");
  }
  std::vector<bool> seen(images.size() + 1, false);
  for (std::uint32_t v : images) {
    if (v == 0 || v > images.size() || seen[v]) {
      throw std::invalid_argument("not a bijection of {1.." +
                                  std::to_string(images.size()) + "}");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  detail::TextCursor cursor(text);
  Permutation p = detail::readPermutation(cursor);
  if (!cursor.atEnd()) cursor.fail("trailing characters after permutation");
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[images_[k] - 1] = static_cast<std::uint32_t>(k + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    out[k] = next.images_[images_[k] - 1];
  }
  return Permutation(std::move(out));
}

bool Permutation::isIdentity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k + 1) return false;
  }
  return true;
}

std::optional<std::size_t> Permutation::rotation() const {
  const std::size_t n = images_.size();
  const std::size_t c = images_[0] - 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (images_[k] != (k + c) % n + 1) return std::nullopt;
  }
  return c;
}

std::string Permutation::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(images_[k]);
  }
  out.push_back(']');
  return out;
}

namespace detail {

Permutation readPermutation(TextCursor& cursor) {
  cursor.expect('[');
  const std::size_t start = cursor.pos();
  std::vector<std::uint32_t> images;
  do {
    const std::size_t at = cursor.pos();
    const unsigned long v = cursor.readUnsigned();
    if (v > 0xffffffffUL) throw ParseError("integer out of range", at);
    images.push_back(static_cast<std::uint32_t>(v));
  } while (cursor.accept(','));
  cursor.expect(']');
  try {
    return Permutation::fromImages(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " at offset " +
                         std::to_string(start),
                     start);
  }
}

}  // namespace detail

ClusterPartition clusterPartition(const Permutation& p) {
  ClusterPartition partition;
  const auto images = p.images();
  std::size_t first = 1;
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i] != images[i - 1] + 1) {
      partition.runs.push_back({first, i});
      first = i + 1;
    }
  }
  partition.runs.push_back({first, images.size()});
  return partition;
}

}  // namespace thompson
