#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramsey_forge {

/// Fixed-size dynamic bitset tuned for clique search: word-parallel
/// intersection, population count and lowest-bit scans.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from = 0) const {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }

  BitSet& operator&=(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// this &= ~o
  BitSet& subtract(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  void flip() {
    for (auto& w : words_) w = ~w;
    trim();
  }

  /// Clears every bit with index <= i.
  void clear_through(std::size_t i) {
    std::size_t wi = i >> 6;
    for (std::size_t k = 0; k < wi; ++k) words_[k] = 0;
    if ((i & 63) == 63) {
      words_[wi] = 0;
    } else {
      words_[wi] &= ~std::uint64_t{0} << ((i & 63) + 1);
    }
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline BitSet operator&(BitSet a, const BitSet& b) {
  a &= b;
  return a;
}

}  // namespace ramsey_forge
