#include "occm/bitset.hpp"

#include <cassert>

namespace occm {

namespace {

std::size_t word_count(std::size_t width) {
  return (width + Bitset::kWordBits - 1) / Bitset::kWordBits;
}

}  // namespace

Bitset::Bitset(std::size_t width, bool value)
    : width_(width), words_(word_count(width), value ? ~Word{0} : Word{0}) {
  trim();
}

Bitset::Bitset(std::size_t width, std::initializer_list<std::size_t> bits)
    : Bitset(width) {
  for (auto b : bits) {
    assert(b < width);
    set(b);
  }
}

Bitset Bitset::from_indices(std::size_t width, const std::vector<std::size_t>& bits) {
  Bitset out(width);
  for (auto b : bits) {
    assert(b < width);
    out.set(b);
  }
  return out;
}

void Bitset::trim() {
  const std::size_t tail = width_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::any() const {
  for (auto w : words_)
    if (w != 0) return true;
  return false;
}

void Bitset::set_all() {
  for (auto& w : words_) w = ~Word{0};
  trim();
}

void Bitset::clear_all() {
  for (auto& w : words_) w = 0;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  assert(width_ == other.width_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  assert(width_ == other.width_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  assert(width_ == other.width_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Bitset Bitset::operator~() const {
  Bitset out(*this);
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  assert(width_ == other.width_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool Bitset::intersects(const Bitset& other) const {
  assert(width_ == other.width_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  assert(width_ == other.width_);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

std::size_t Bitset::find_first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return width_;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Bitset::hash() const {
  // FNV-1a over words, then width.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  h ^= width_;
  h *= 1099511628211ULL;
  return static_cast<std::size_t>(h);
}

bool index_lex_less(const Bitset& a, const Bitset& b) {
  assert(a.width_ == b.width_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const Bitset::Word diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    // The lowest differing bit decides. The set that owns it has the smaller
    // element at that position, unless the other set has already run out of
    // elements, in which case the other (a proper prefix) is smaller.
    const auto bit = static_cast<std::size_t>(std::countr_zero(diff));
    const bool a_has = (a.words_[i] >> bit) & 1U;
    const Bitset& other = a_has ? b : a;
    // Does `other` have any element above this position?
    bool other_continues = false;
    const Bitset::Word above_mask = bit + 1 == Bitset::kWordBits ? 0 : (~Bitset::Word{0} << (bit + 1));
    if ((other.words_[i] & above_mask) != 0) {
      other_continues = true;
    } else {
      for (std::size_t j = i + 1; j < other.words_.size(); ++j)
        if (other.words_[j] != 0) {
          other_continues = true;
          break;
        }
    }
    return a_has == other_continues;
  }
  return false;
}

Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

}  // namespace occm
