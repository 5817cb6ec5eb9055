#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace occm {

/// Fixed-width bit vector used for itemsets (width |U|) and covers (width n).
///
/// Width is set at construction and never changes; binary operations require
/// equal widths. Bits beyond the width inside the last word are kept at zero
/// so word-wise equality and hashing are exact.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t width, bool value = false);
  Bitset(std::size_t width, std::initializer_list<std::size_t> bits);

  static Bitset from_indices(std::size_t width, const std::vector<std::size_t>& bits);

  std::size_t width() const { return width_; }
  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set_all();
  void clear_all();

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  /// this &= ~other
  Bitset& subtract(const Bitset& other);
  Bitset operator~() const;

  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;
  std::size_t intersection_count(const Bitset& other) const;

  /// Lowest set index, or width() when empty.
  std::size_t find_first() const;

  /// Indices of set bits in ascending order.
  std::vector<std::size_t> indices() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        fn(w * kWordBits + bit);
        word &= word - 1;
      }
    }
  }

  const std::vector<Word>& words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  /// Lexicographic order on the ascending index lists of the set bits,
  /// e.g. {0,1,5} < {0,2} and {0,1} < {0,1,2}.
  friend bool index_lex_less(const Bitset& a, const Bitset& b);

 private:
  void trim();

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

Bitset operator&(Bitset a, const Bitset& b);
Bitset operator|(Bitset a, const Bitset& b);

}  // namespace occm

template <>
struct std::hash<occm::Bitset> {
  std::size_t operator()(const occm::Bitset& b) const noexcept { return b.hash(); }
};
