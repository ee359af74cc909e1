#ifndef THOMPSON_PERMUTATION_H
#define THOMPSON_PERMUTATION_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

/// A bijection of {1..n}, n >= 1, in one-line notation: images()[k] is the
/// image of k+1.
class Permutation {
 public:
  Permutation() : images_{1} {}

  static Permutation identity(std::size_t n);
  /// Validates that `images` is a bijection of {1..n}; throws
  /// std::invalid_argument otherwise.
  static Permutation fromImages(std::vector<std::uint32_t> images);
  /// Grammar: "[" int ("," int)* "]", whitespace ignored.
  static Permutation parse(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  /// Image of i, 1-based.
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }
  std::span<const std::uint32_t> images() const { return images_; }

  Permutation inverse() const;
  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;

  bool isIdentity() const;
  /// The rotation amount c if sigma(i) = ((i - 1 + c) mod n) + 1.
  std::optional<std::size_t> rotation() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

/// A maximal run {first..last} of consecutive positions with consecutive
/// images.
struct ClusterRun {
  std::size_t first;
  std::size_t last;

  std::size_t size() const { return last - first + 1; }
  friend bool operator==(const ClusterRun&, const ClusterRun&) = default;
};

struct ClusterPartition {
  std::vector<ClusterRun> runs;

  std::size_t count() const { return runs.size(); }
};

/// Splits {1..n} into the maximal runs where sigma(i+j) = sigma(i)+j.
ClusterPartition clusterPartition(const Permutation& p);

}  // namespace thompson

#endif  // THOMPSON_PERMUTATION_H
