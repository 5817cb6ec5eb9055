#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "occm/bitset.hpp"

namespace occm {

using ItemId = std::size_t;

/// Raised when an itemset or cover does not match the width of the database
/// it is evaluated against.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense item ids 0..size()-1 with optional display names.
class ItemUniverse {
 public:
  explicit ItemUniverse(std::size_t size, std::vector<std::string> names = {});

  std::size_t size() const { return size_; }
  bool has_names() const { return !names_.empty(); }
  /// Display name; the decimal id when no name table is attached.
  std::string name(ItemId id) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::size_t size_;
  std::vector<std::string> names_;
};

/// Immutable transactional database. Each transaction is a bitset of width
/// |U|; the vertical view (one tidset per item) is built once at construction.
class TransactionDB {
 public:
  TransactionDB(ItemUniverse universe, std::vector<Bitset> transactions);

  /// Convenience constructor from item id lists. Universe size is taken from
  /// `universe_size`, or max id + 1 when zero.
  static TransactionDB from_lists(const std::vector<std::vector<ItemId>>& rows,
                                  std::size_t universe_size = 0);

  const ItemUniverse& universe() const { return universe_; }
  std::size_t item_count() const { return universe_.size(); }
  std::size_t size() const { return transactions_.size(); }
  const Bitset& transaction(std::size_t i) const { return transactions_[i]; }
  const std::vector<Bitset>& transactions() const { return transactions_; }
  /// Transactions containing `item`, as a bitset of width n.
  const Bitset& tidset(ItemId item) const { return tidsets_[item]; }

  /// (sum of transaction lengths) / (n * |U|)
  double density() const;

  /// Stable content hash used to tag mined collections.
  std::uint64_t fingerprint() const;

  TransactionDB with_names(std::vector<std::string> names) const;

 private:
  ItemUniverse universe_;
  std::vector<Bitset> transactions_;
  std::vector<Bitset> tidsets_;
};

/// Non-empty itemset over a universe of fixed width.
class Pattern {
 public:
  explicit Pattern(Bitset items);
  static Pattern of(std::size_t universe_size, const std::vector<ItemId>& items);

  const Bitset& items() const { return items_; }
  std::size_t size() const { return size_; }
  std::size_t universe_size() const { return items_.width(); }
  bool contains(ItemId id) const { return items_.test(id); }
  std::vector<ItemId> item_ids() const { return items_.indices(); }

  /// Space separated ids, or names if the universe has them.
  std::string to_string(const ItemUniverse* universe = nullptr) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Bitset items_;
  std::size_t size_;
};

/// Size first, then lexicographic on ascending item ids.
bool canonical_less(const Pattern& a, const Pattern& b);

/// Set of transaction indices, as a bitset of width n.
class CoverSet {
 public:
  CoverSet() = default;
  explicit CoverSet(Bitset members) : members_(std::move(members)) {}
  static CoverSet of(std::size_t n, const std::vector<std::size_t>& indices);

  const Bitset& members() const { return members_; }
  std::size_t cardinality() const { return members_.count(); }
  std::size_t universe_size() const { return members_.width(); }
  bool contains(std::size_t t) const { return members_.test(t); }
  bool empty() const { return members_.none(); }
  std::vector<std::size_t> indices() const { return members_.indices(); }

  friend bool operator==(const CoverSet&, const CoverSet&) = default;

 private:
  Bitset members_;
};

/// Cov(I, D): transactions containing every item of the pattern.
CoverSet cover(const Pattern& pattern, const TransactionDB& db);
inline std::size_t support(const Pattern& pattern, const TransactionDB& db) {
  return cover(pattern, db).cardinality();
}

/// Cov^k(I, D): transactions that share at least one item with the pattern
/// and miss at most k of its items.
CoverSet k_cover(const Pattern& pattern, const TransactionDB& db, std::size_t k);
inline std::size_t k_support(const Pattern& pattern, const TransactionDB& db, std::size_t k) {
  return k_cover(pattern, db, k).cardinality();
}

/// k-cover of an arbitrary (possibly empty) itemset. The empty itemset
/// intersects no transaction, so its k-cover is empty.
CoverSet k_cover_of(const Bitset& items, const TransactionDB& db, std::size_t k);

/// Intersection of the transactions in `cover` (full universe if empty).
Bitset closure_of(const CoverSet& cover, const TransactionDB& db);

/// True iff the pattern equals the intersection of the transactions in its
/// classical cover. Patterns with empty cover are not closed.
bool is_closed(const Pattern& pattern, const TransactionDB& db);

}  // namespace occm

template <>
struct std::hash<occm::CoverSet> {
  std::size_t operator()(const occm::CoverSet& c) const noexcept { return c.members().hash(); }
};
