#ifndef THOMPSON_CAYLEY_H
#define THOMPSON_CAYLEY_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "thompson/element.h"
#include "thompson/errors.h"
#include "thompson/word.h"

namespace thompson {

inline constexpr unsigned kDefaultRadius = 7;
inline constexpr std::size_t kDefaultMemoryBudgetMb = 2048;

/// Budget from THOMPSON_MEM_BUDGET_MB, or kDefaultMemoryBudgetMb.
std::size_t memoryBudgetBytesFromEnv();

/// Inverse of canonicalKey.
Element decodeKey(const std::string& key);

/// Breadth-first exploration of the Cayley graph of V on the eight
/// generator symbols, starting from one element and multiplying on the
/// right. Distinct group elements are identified by the canonical key of
/// their reduced diagram. Level k is complete before level k+1 starts.
class CayleyBall {
 public:
  struct Entry {
    std::uint32_t parent;    // index of the predecessor; self for the root
    std::uint8_t symbol;     // GeneratorSymbol index used to reach this entry
    std::uint8_t distance;
  };

  /// Called once per newly discovered element, in discovery order.
  using Visitor = std::function<void(const Element&, unsigned distance)>;

  explicit CayleyBall(const Element& root = Element(),
                      std::size_t memoryBudgetBytes = memoryBudgetBytesFromEnv());

  /// Expands one more level. Throws ResourceError once the estimated memory
  /// exceeds the budget; the ball then stays at its last complete radius.
  void grow(const Visitor& visit = {});
  void growTo(unsigned radius, const Visitor& visit = {});

  unsigned radius() const { return radius_; }
  std::size_t size() const { return entries_.size(); }
  /// Number of elements at each exact distance 0..radius().
  std::vector<std::size_t> sphereSizes() const;

  std::optional<unsigned> distanceOf(const Element& x) const;
  std::optional<std::uint32_t> indexOf(const std::string& key) const;
  const Entry& entry(std::uint32_t index) const { return entries_[index]; }
  const std::string& keyAt(std::uint32_t index) const { return *keys_[index]; }

  /// Word w of minimal length with root * w = element at `index`.
  Word pathTo(std::uint32_t index) const;

  /// Elements of the outermost level.
  const std::vector<std::uint32_t>& frontier() const { return frontier_; }

  std::size_t estimatedBytes() const { return bytes_; }

 private:
  std::uint32_t insert(std::string key, std::uint32_t parent,
                       std::uint8_t symbol, std::uint8_t distance);

  std::size_t budget_;
  unsigned radius_ = 0;
  std::size_t bytes_ = 0;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<const std::string*> keys_;
  std::vector<Entry> entries_;
  std::vector<std::uint32_t> frontier_;
};

/// Exact word length, or nothing if it exceeds the searched radius.
struct LengthResult {
  std::optional<unsigned> length;
  /// Radius actually covered by the search.
  unsigned radius = 0;
  /// A word of exactly `length` symbols evaluating to the element.
  Word witness;
};

/// Meet-in-the-middle search from the identity and from x. Throws
/// ResourceError if the memory budget runs out first.
LengthResult exactWordLength(const Element& x, unsigned radius = kDefaultRadius,
                             std::size_t memoryBudgetBytes = memoryBudgetBytesFromEnv());

/// Counts of distinct elements at each exact distance 0..radius.
std::vector<std::size_t> ballSizes(unsigned radius,
                                   std::size_t memoryBudgetBytes = memoryBudgetBytesFromEnv());

}  // namespace thompson

#endif  // THOMPSON_CAYLEY_H
