#include "thompson/cayley.h"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace thompson {

namespace {

// Rough per-entry overhead of the hash node, bucket, key string and the
// parallel vectors, in bytes.
constexpr std::size_t kEntryOverhead = 112;

std::size_t keyFootprint(const std::string& key) {
  // Short keys live inside the string object itself.
  return kEntryOverhead + (key.size() > 15 ? key.size() + 1 : 0);
}

}  // namespace

std::size_t memoryBudgetBytesFromEnv() {
  std::size_t mb = kDefaultMemoryBudgetMb;
  if (const char* env = std::getenv("THOMPSON_MEM_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) mb = static_cast<std::size_t>(v);
  }
  return mb * 1024 * 1024;
}

Element decodeKey(const std::string& key) {
  std::size_t bit = 0;
  auto readBit = [&]() -> char {
    if (bit / 8 >= key.size()) throw std::invalid_argument("truncated key");
    const auto byte = static_cast<unsigned char>(key[bit / 8]);
    const char c = ((byte >> (7 - bit % 8)) & 1U) != 0 ? '1' : '0';
    ++bit;
    return c;
  };
  auto readTree = [&]() {
    std::string code;
    std::size_t need = 1;
    while (need > 0) {
      const char c = readBit();
      code.push_back(c);
      if (c == '1') {
        ++need;
      } else {
        --need;
      }
    }
    return Tree::fromCode(std::move(code));
  };
  Tree domain = readTree();
  Tree range = readTree();
  std::size_t pos = (bit + 7) / 8;
  std::vector<std::uint32_t> images;
  images.reserve(domain.leafCount());
  while (images.size() < domain.leafCount()) {
    std::uint32_t v = 0;
    unsigned shift = 0;
    for (;;) {
      if (pos >= key.size()) throw std::invalid_argument("truncated key");
      const auto byte = static_cast<unsigned char>(key[pos++]);
      v |= static_cast<std::uint32_t>(byte & 0x7fU) << shift;
      shift += 7;
      if ((byte & 0x80U) == 0) break;
    }
    images.push_back(v);
  }
  return Element(std::move(domain), std::move(range),
                 Permutation::fromImages(std::move(images)));
}

CayleyBall::CayleyBall(const Element& root, std::size_t memoryBudgetBytes)
    : budget_(memoryBudgetBytes) {
  const std::uint32_t r = insert(canonicalKey(reduce(root)), 0, 0, 0);
  frontier_.push_back(r);
}

std::uint32_t CayleyBall::insert(std::string key, std::uint32_t parent,
                                 std::uint8_t symbol, std::uint8_t distance) {
  if (entries_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("Cayley ball index space exhausted", radius_);
  }
  const auto id = static_cast<std::uint32_t>(entries_.size());
  bytes_ += keyFootprint(key);
  const auto [it, inserted] = index_.emplace(std::move(key), id);
  (void)inserted;
  keys_.push_back(&it->first);
  entries_.push_back({entries_.empty() ? id : parent, symbol, distance});
  return id;
}

void CayleyBall::grow(const Visitor& visit) {
  if (radius_ >= std::numeric_limits<std::uint8_t>::max()) {
    throw ResourceError("Cayley ball radius limit reached", radius_);
  }
  const auto symbols = allSymbols();
  const auto distance = static_cast<std::uint8_t>(radius_ + 1);
  const std::size_t sizeBefore = entries_.size();
  const std::size_t bytesBefore = bytes_;
  std::vector<std::uint32_t> next;
  try {
    for (std::uint32_t from : frontier_) {
      const Element x = decodeKey(*keys_[from]);
      for (const auto& s : symbols) {
        Element y = multiply(x, symbolElement(s));
        std::string key = canonicalKey(y);
        if (index_.contains(key)) continue;
        if (bytes_ + keyFootprint(key) > budget_) {
          throw ResourceError("memory budget of " +
                                  std::to_string(budget_ / (1024 * 1024)) +
                                  " MB exceeded while expanding radius " +
                                  std::to_string(radius_ + 1) +
                                  "; completed radius " +
                                  std::to_string(radius_),
                              radius_);
        }
        next.push_back(insert(std::move(key), from,
                              static_cast<std::uint8_t>(s.index()), distance));
        if (visit) visit(y, distance);
      }
    }
  } catch (const ResourceError&) {
    // Roll back the partial level.
    while (entries_.size() > sizeBefore) {
      index_.erase(*keys_.back());
      keys_.pop_back();
      entries_.pop_back();
    }
    bytes_ = bytesBefore;
    throw;
  }
  frontier_ = std::move(next);
  ++radius_;
}

void CayleyBall::growTo(unsigned radius, const Visitor& visit) {
  while (radius_ < radius) grow(visit);
}

std::vector<std::size_t> CayleyBall::sphereSizes() const {
  std::vector<std::size_t> sizes(radius_ + 1, 0);
  for (const auto& e : entries_) ++sizes[e.distance];
  return sizes;
}

std::optional<std::uint32_t> CayleyBall::indexOf(const std::string& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<unsigned> CayleyBall::distanceOf(const Element& x) const {
  const auto id = indexOf(canonicalKey(reduce(x)));
  if (!id) return std::nullopt;
  return entries_[*id].distance;
}

Word CayleyBall::pathTo(std::uint32_t index) const {
  Word w;
  while (entries_[index].parent != index) {
    w.push_back(GeneratorSymbol::fromIndex(entries_[index].symbol));
    index = entries_[index].parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

LengthResult exactWordLength(const Element& x, unsigned radius,
                             std::size_t memoryBudgetBytes) {
  CayleyBall forward(Element(), memoryBudgetBytes / 2);
  CayleyBall backward(x, memoryBudgetBytes / 2);
  LengthResult result;
  if (forward.indexOf(backward.keyAt(0))) {
    result.length = 0;
    return result;
  }
  while (forward.radius() + backward.radius() < radius) {
    const bool growForward =
        forward.frontier().size() <= backward.frontier().size();
    CayleyBall& side = growForward ? forward : backward;
    const CayleyBall& other = growForward ? backward : forward;
    try {
      side.grow();
    } catch (const ResourceError& e) {
      const unsigned done = forward.radius() + backward.radius();
      throw ResourceError(std::string(e.what()) +
                              " (word-length search completed radius " +
                              std::to_string(done) + ")",
                          done);
    }
    result.radius = forward.radius() + backward.radius();

    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
    unsigned bestLength = std::numeric_limits<unsigned>::max();
    for (std::uint32_t id : side.frontier()) {
      const auto match = other.indexOf(side.keyAt(id));
      if (!match) continue;
      const unsigned length = side.entry(id).distance + other.entry(*match).distance;
      if (length < bestLength) {
        bestLength = length;
        best = growForward ? std::pair{id, *match} : std::pair{*match, id};
      }
    }
    if (best) {
      result.length = bestLength;
      result.witness = forward.pathTo(best->first);
      const Word back = inverse(backward.pathTo(best->second));
      result.witness.insert(result.witness.end(), back.begin(), back.end());
      return result;
    }
  }
  result.radius = forward.radius() + backward.radius();
  return result;
}

std::vector<std::size_t> ballSizes(unsigned radius, std::size_t memoryBudgetBytes) {
  CayleyBall ball(Element(), memoryBudgetBytes);
  ball.growTo(radius);
  return ball.sphereSizes();
}

}  // namespace thompson
