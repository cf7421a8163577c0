#ifndef BOREL_ROOT_SET_HPP
#define BOREL_ROOT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace borel {

/// Subset of the positive roots of a fixed system, stored as a bitset over
/// root indices.
class RootSet {
public:
  RootSet() = default;
  explicit RootSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  int universe() const { return universe_; }

  bool test(int i) const { return (words_[word(i)] >> bit(i)) & 1U; }
  void set(int i) { words_[word(i)] |= std::uint64_t{1} << bit(i); }
  void reset(int i) { words_[word(i)] &= ~(std::uint64_t{1} << bit(i)); }

  int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const { return count() == 0; }

  /// Member indices, ascending.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
        out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
    return out;
  }

  bool is_subset_of(const RootSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ w) * 1099511628211ULL;
    return h;
  }

  friend bool operator==(const RootSet&, const RootSet&) = default;

  /// Canonical order: by size, then lexicographically on the ascending index
  /// lists.
  friend std::strong_ordering operator<=>(const RootSet& a, const RootSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (diff == 0) continue;
      // the set holding the smallest differing index sorts first
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[k] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

private:
  static std::size_t word(int i) { return static_cast<std::size_t>(i) / 64; }
  static int bit(int i) { return i % 64; }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const noexcept { return s.hash(); }
};

} // namespace borel

#endif // BOREL_ROOT_SET_HPP
