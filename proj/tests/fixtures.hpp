#pragma once

#include <string>
#include <vector>

#include "occm/core.hpp"

namespace occm::testing {

// Items a, b, c, ... map to ids 0, 1, 2, ...
inline ItemId item(char c) { return static_cast<ItemId>(c - 'a'); }

inline std::vector<ItemId> items(const std::string& letters) {
  std::vector<ItemId> out;
  for (char c : letters) out.push_back(item(c));
  return out;
}

// tau1 = abce, tau2 = ef, tau3 = abdh, tau4 = gh
inline TransactionDB table1() {
  return TransactionDB::from_lists({items("abce"), items("ef"), items("abdh"), items("gh")}, 8);
}

// tau1 = abce, tau2 = abcf, tau3 = abcg, tau4 = ahi, tau5 = ahij (universe a..j)
inline TransactionDB table2() {
  return TransactionDB::from_lists(
      {items("abce"), items("abcf"), items("abcg"), items("ahi"), items("ahij")}, 10);
}

// Three copies of abcd plus a stray "a" transaction. Under k = 1 the patterns
// abc and abcd share the cover {0,1,2}, but dropping b or c from abc lets the
// stray transaction in.
inline TransactionDB nested_fixture() {
  return TransactionDB::from_lists({items("abcd"), items("abcd"), items("abcd"), items("ax")}, 24);
}

inline Pattern pat(const TransactionDB& db, const std::string& letters) {
  return Pattern::of(db.item_count(), items(letters));
}

inline CoverSet tx(const TransactionDB& db, const std::vector<std::size_t>& one_based) {
  std::vector<std::size_t> zero;
  for (auto t : one_based) zero.push_back(t - 1);
  return CoverSet::of(db.size(), zero);
}

}  // namespace occm::testing
