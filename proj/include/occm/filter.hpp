#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

#include "occm/core.hpp"
#include "occm/miner.hpp"

namespace occm {

/// Partial map from a k-cover to the single pattern representing it.
class CoverMap {
 public:
  /// Stores `pattern` under `cover`, replacing any existing entry.
  void assign(const CoverSet& cover, std::size_t pattern_index) { map_[cover] = pattern_index; }
  std::optional<std::size_t> find(const CoverSet& cover) const;
  std::size_t size() const { return map_.size(); }
  const std::unordered_map<CoverSet, std::size_t>& entries() const { return map_; }

 private:
  std::unordered_map<CoverSet, std::size_t> map_;
};

struct FilterReport {
  std::size_t before = 0;
  std::size_t after = 0;
  /// 100 * (before - after) / before; 0 when the input was empty.
  double delta_percent = 0.0;
  bool empty_input = false;
  /// class size -> number of distinct covers shared by that many patterns.
  std::map<std::size_t, std::size_t> class_sizes;
};

double reduction_percent(std::size_t before, std::size_t after);

struct FilterResult {
  PatternCollection patterns;
  FilterReport report;
};

/// Keeps one pattern per distinct k-cover: the largest one, and among
/// equal sizes the lexicographically greatest item list. Patterns are visited
/// in ascending canonical order and later ones overwrite earlier map entries.
/// Output is in canonical order with k-covers cached.
FilterResult filter_redundant(const PatternCollection& patterns, const TransactionDB& db,
                              std::size_t k);

/// Number of distinct k-RFPs of the form Q u E (E subset of R, |E| = k) that
/// share the k-cover H, where Q is the intersection of H's transactions and R
/// the remaining items of H. Returns nullopt when Q is empty or some item of
/// R occurs in more than one transaction of H. Throws if |H| < 3.
std::optional<std::uint64_t> redundancy_count(const CoverSet& h, const TransactionDB& db,
                                              std::size_t k);

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

}  // namespace occm
