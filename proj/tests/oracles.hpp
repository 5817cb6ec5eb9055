#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain std::set / std::vector data and share no code path with the library
// beyond reading transactions out of a TransactionDB.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "occm/core.hpp"
#include "occm/explain.hpp"

namespace occm::oracle {

using ItemSet = std::vector<std::size_t>;  // ascending
using TxSet = std::vector<std::size_t>;    // ascending transaction indices
using Rows = std::vector<std::set<std::size_t>>;

inline Rows rows_of(const TransactionDB& db) {
  Rows rows;
  for (const auto& t : db.transactions()) {
    auto ids = t.indices();
    rows.emplace_back(ids.begin(), ids.end());
  }
  return rows;
}

inline std::size_t present_count(const ItemSet& items, const std::set<std::size_t>& row) {
  std::size_t c = 0;
  for (auto i : items) c += row.count(i);
  return c;
}

inline TxSet cover(const ItemSet& items, const Rows& rows) {
  TxSet out;
  for (std::size_t t = 0; t < rows.size(); ++t)
    if (present_count(items, rows[t]) == items.size()) out.push_back(t);
  return out;
}

inline TxSet k_cover(const ItemSet& items, const Rows& rows, std::size_t k) {
  TxSet out;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const std::size_t present = present_count(items, rows[t]);
    if (present >= 1 && items.size() - present <= k) out.push_back(t);
  }
  return out;
}

inline ItemSet intersection(const TxSet& txs, const Rows& rows, std::size_t universe) {
  ItemSet out;
  for (std::size_t i = 0; i < universe; ++i) {
    bool all = true;
    for (auto t : txs) all = all && rows[t].count(i) > 0;
    if (all) out.push_back(i);
  }
  return out;
}

/// Every non-empty subset of 0..universe-1 (universe <= 20).
inline std::vector<ItemSet> powerset(std::size_t universe, std::size_t max_size) {
  std::vector<ItemSet> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << universe); ++mask) {
    ItemSet s;
    for (std::size_t i = 0; i < universe; ++i)
      if (mask & (std::uint32_t{1} << i)) s.push_back(i);
    if (s.size() <= max_size) out.push_back(std::move(s));
  }
  return out;
}

inline std::set<ItemSet> krfps(const TransactionDB& db, std::size_t k, std::size_t alpha,
                               std::size_t max_size) {
  const Rows rows = rows_of(db);
  std::set<ItemSet> out;
  for (auto& s : powerset(db.item_count(), max_size))
    if (k_cover(s, rows, k).size() >= alpha) out.insert(s);
  return out;
}

inline std::set<ItemSet> frequent(const TransactionDB& db, std::size_t alpha) {
  const Rows rows = rows_of(db);
  std::set<ItemSet> out;
  for (auto& s : powerset(db.item_count(), db.item_count()))
    if (cover(s, rows).size() >= alpha) out.insert(s);
  return out;
}

inline std::set<ItemSet> closed(const TransactionDB& db, std::size_t alpha) {
  const Rows rows = rows_of(db);
  std::set<ItemSet> out;
  for (auto& s : powerset(db.item_count(), db.item_count())) {
    const TxSet c = cover(s, rows);
    if (c.empty() || c.size() < alpha) continue;
    if (intersection(c, rows, db.item_count()) == s) out.insert(s);
  }
  return out;
}

/// Group by exact k-cover, keep the largest member, ties to the
/// lexicographically greatest item list.
inline std::set<ItemSet> filter_groupby(const std::vector<ItemSet>& patterns, const TransactionDB& db,
                                        std::size_t k) {
  const Rows rows = rows_of(db);
  std::map<TxSet, ItemSet> best;
  for (const auto& p : patterns) {
    const TxSet c = k_cover(p, rows, k);
    auto it = best.find(c);
    if (it == best.end() || p.size() > it->second.size() ||
        (p.size() == it->second.size() && p > it->second))
      best[c] = p;
  }
  std::set<ItemSet> out;
  for (auto& [c, p] : best) out.insert(p);
  return out;
}

inline Rational importance(const ItemSet& items, const Rows& rows, std::size_t k) {
  if (items.empty()) return 0;
  Rational total = 0;
  for (auto t : k_cover(items, rows, k))
    total += Rational(static_cast<std::int64_t>(present_count(items, rows[t])),
                      static_cast<std::int64_t>(items.size()));
  return total;
}

/// Average marginal contribution over all |I|! orderings.
inline std::map<std::size_t, Rational> permutation_shapley(const ItemSet& items, const TransactionDB& db,
                                                           std::size_t k) {
  const Rows rows = rows_of(db);
  std::map<std::size_t, Rational> sum;
  for (auto i : items) sum[i] = 0;
  ItemSet order = items;
  std::int64_t perms = 0;
  do {
    ++perms;
    ItemSet prefix;
    Rational prev = 0;
    for (auto i : order) {
      prefix.push_back(i);
      ItemSet sorted = prefix;
      std::sort(sorted.begin(), sorted.end());
      const Rational cur = importance(sorted, rows, k);
      sum[i] += cur - prev;
      prev = cur;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& [i, v] : sum) v /= perms;
  return sum;
}

inline Rational jaccard(const TxSet& a, const TxSet& b) {
  std::vector<std::size_t> inter, uni;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
  if (uni.empty()) return 1;
  return Rational(static_cast<std::int64_t>(inter.size()), static_cast<std::int64_t>(uni.size()));
}

inline Rational leave_one_out_acs(const ItemSet& items, const TransactionDB& db, std::size_t k) {
  const Rows rows = rows_of(db);
  const TxSet full = k_cover(items, rows, k);
  Rational total = 0;
  for (std::size_t drop = 0; drop < items.size(); ++drop) {
    ItemSet rest;
    for (std::size_t j = 0; j < items.size(); ++j)
      if (j != drop) rest.push_back(items[j]);
    const TxSet reduced = rest.empty() ? TxSet{} : k_cover(rest, rows, k);
    total += jaccard(full, reduced);
  }
  return total / static_cast<std::int64_t>(items.size());
}

inline long double two_pass_variance(const std::vector<long double>& xs) {
  long double mean = 0;
  for (auto x : xs) mean += x;
  mean /= static_cast<long double>(xs.size());
  long double var = 0;
  for (auto x : xs) var += (x - mean) * (x - mean);
  return var / static_cast<long double>(xs.size());
}

/// Number of E subset of R with |E| = k whose pattern Q u E has k-cover h.
inline std::uint64_t shared_cover_count(const ItemSet& q, const ItemSet& r, const TxSet& h,
                                        const TransactionDB& db, std::size_t k) {
  const Rows rows = rows_of(db);
  std::uint64_t count = 0;
  if (k > r.size()) return 0;
  std::vector<bool> pick(r.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    ItemSet p = q;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (pick[i]) p.push_back(r[i]);
    std::sort(p.begin(), p.end());
    if (k_cover(p, rows, k) == h) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

/// Macro F1 maximized over all theta! cluster-to-class bijections.
inline Rational best_macro_f1(const std::vector<TxSet>& clusters, const std::vector<TxSet>& classes) {
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational best = -1;
  do {
    Rational total = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      const auto& a = clusters[i];
      const auto& b = classes[perm[i]];
      std::vector<std::size_t> inter;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (a.size() + b.size() > 0)
        total += Rational(static_cast<std::int64_t>(2 * inter.size()),
                          static_cast<std::int64_t>(a.size() + b.size()));
    }
    total /= static_cast<std::int64_t>(clusters.size());
    if (total > best) best = total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace occm::oracle
