#include "occm/core.hpp"

#include <algorithm>
#include <sstream>

namespace occm {

ItemUniverse::ItemUniverse(std::size_t size, std::vector<std::string> names)
    : size_(size), names_(std::move(names)) {
  if (size_ == 0) throw std::invalid_argument("item universe must contain at least one item");
  if (!names_.empty() && names_.size() != size_)
    throw DimensionError("item name table has " + std::to_string(names_.size()) +
                         " entries for a universe of " + std::to_string(size_));
}

std::string ItemUniverse::name(ItemId id) const {
  if (id < names_.size()) return names_[id];
  return std::to_string(id);
}

TransactionDB::TransactionDB(ItemUniverse universe, std::vector<Bitset> transactions)
    : universe_(std::move(universe)), transactions_(std::move(transactions)) {
  if (transactions_.empty()) throw std::invalid_argument("database must contain at least one transaction");
  const std::size_t width = universe_.size();
  for (std::size_t i = 0; i < transactions_.size(); ++i)
    if (transactions_[i].width() != width)
      throw DimensionError("transaction " + std::to_string(i) + " has width " +
                           std::to_string(transactions_[i].width()) + ", expected " +
                           std::to_string(width));

  tidsets_.assign(width, Bitset(transactions_.size()));
  for (std::size_t t = 0; t < transactions_.size(); ++t)
    transactions_[t].for_each([&](std::size_t item) { tidsets_[item].set(t); });
}

TransactionDB TransactionDB::from_lists(const std::vector<std::vector<ItemId>>& rows,
                                        std::size_t universe_size) {
  if (universe_size == 0) {
    for (const auto& row : rows)
      for (auto id : row) universe_size = std::max(universe_size, id + 1);
  }
  std::vector<Bitset> tx;
  tx.reserve(rows.size());
  for (const auto& row : rows) {
    Bitset b(universe_size);
    for (auto id : row) {
      if (id >= universe_size) throw DimensionError("item id " + std::to_string(id) + " outside universe");
      b.set(id);
    }
    tx.push_back(std::move(b));
  }
  return TransactionDB(ItemUniverse(universe_size), std::move(tx));
}

double TransactionDB::density() const {
  std::size_t ones = 0;
  for (const auto& t : transactions_) ones += t.count();
  return static_cast<double>(ones) /
         (static_cast<double>(transactions_.size()) * static_cast<double>(universe_.size()));
}

std::uint64_t TransactionDB::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_.size();
  for (const auto& t : transactions_) {
    h ^= t.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

TransactionDB TransactionDB::with_names(std::vector<std::string> names) const {
  return TransactionDB(ItemUniverse(universe_.size(), std::move(names)), transactions_);
}

Pattern::Pattern(Bitset items) : items_(std::move(items)), size_(items_.count()) {
  if (size_ == 0) throw std::invalid_argument("pattern must be non-empty");
}

Pattern Pattern::of(std::size_t universe_size, const std::vector<ItemId>& items) {
  for (auto id : items)
    if (id >= universe_size) throw DimensionError("item id " + std::to_string(id) + " outside universe");
  return Pattern(Bitset::from_indices(universe_size, items));
}

std::string Pattern::to_string(const ItemUniverse* universe) const {
  std::ostringstream os;
  bool first = true;
  items_.for_each([&](std::size_t id) {
    if (!first) os << ' ';
    first = false;
    if (universe != nullptr && universe->has_names())
      os << universe->name(id);
    else
      os << id;
  });
  return os.str();
}

bool canonical_less(const Pattern& a, const Pattern& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return index_lex_less(a.items(), b.items());
}

CoverSet CoverSet::of(std::size_t n, const std::vector<std::size_t>& indices) {
  for (auto t : indices)
    if (t >= n) throw DimensionError("transaction index " + std::to_string(t) + " outside database");
  return CoverSet(Bitset::from_indices(n, indices));
}

namespace {

void check_width(const Bitset& items, const TransactionDB& db) {
  if (items.width() != db.item_count())
    throw DimensionError("itemset width " + std::to_string(items.width()) +
                         " does not match universe size " + std::to_string(db.item_count()));
}

}  // namespace

CoverSet cover(const Pattern& pattern, const TransactionDB& db) {
  check_width(pattern.items(), db);
  Bitset members(db.size(), true);
  pattern.items().for_each([&](std::size_t item) { members &= db.tidset(item); });
  return CoverSet(std::move(members));
}

CoverSet k_cover(const Pattern& pattern, const TransactionDB& db, std::size_t k) {
  return k_cover_of(pattern.items(), db, k);
}

CoverSet k_cover_of(const Bitset& items, const TransactionDB& db, std::size_t k) {
  check_width(items, db);
  const std::size_t size = items.count();
  Bitset members(db.size());
  for (std::size_t t = 0; t < db.size(); ++t) {
    const std::size_t present = items.intersection_count(db.transaction(t));
    if (present > 0 && size - present <= k) members.set(t);
  }
  return CoverSet(std::move(members));
}

Bitset closure_of(const CoverSet& cover, const TransactionDB& db) {
  if (cover.universe_size() != db.size())
    throw DimensionError("cover width does not match transaction count");
  Bitset out(db.item_count(), true);
  cover.members().for_each([&](std::size_t t) { out &= db.transaction(t); });
  return out;
}

bool is_closed(const Pattern& pattern, const TransactionDB& db) {
  const CoverSet c = cover(pattern, db);
  if (c.empty()) return false;
  return closure_of(c, db) == pattern.items();
}

}  // namespace occm
