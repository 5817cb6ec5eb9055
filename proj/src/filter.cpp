#include "occm/filter.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace occm {

std::optional<std::size_t> CoverMap::find(const CoverSet& cover) const {
  auto it = map_.find(cover);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

double reduction_percent(std::size_t before, std::size_t after) {
  if (before == 0) return 0.0;
  return 100.0 * static_cast<double>(before - after) / static_cast<double>(before);
}

FilterResult filter_redundant(const PatternCollection& patterns, const TransactionDB& db,
                              std::size_t k) {
  FilterResult result;
  result.report.before = patterns.size();
  result.report.empty_input = patterns.empty();
  result.patterns.provenance = patterns.provenance;
  result.patterns.provenance.k = k;

  std::vector<std::size_t> order(patterns.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(patterns.patterns[a], patterns.patterns[b]);
  });

  std::vector<CoverSet> covers(patterns.size());
  CoverMap map;
  std::unordered_map<CoverSet, std::size_t> class_count;
  for (auto i : order) {
    covers[i] = k_cover(patterns.patterns[i], db, k);
    map.assign(covers[i], i);
    ++class_count[covers[i]];
  }

  for (const auto& [cover, index] : map.entries()) {
    result.patterns.patterns.push_back(patterns.patterns[index]);
    result.patterns.covers.push_back(cover);
  }
  canonicalize(result.patterns);

  for (const auto& [cover, n] : class_count) ++result.report.class_sizes[n];
  result.report.after = result.patterns.size();
  result.report.delta_percent = reduction_percent(result.report.before, result.report.after);
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<std::uint64_t> redundancy_count(const CoverSet& h, const TransactionDB& db,
                                              std::size_t k) {
  if (h.universe_size() != db.size()) throw DimensionError("cover width does not match transaction count");
  if (h.cardinality() < 3) throw std::invalid_argument("redundancy_count requires |H| >= 3");

  Bitset common(db.item_count(), true);
  Bitset all(db.item_count());
  h.members().for_each([&](std::size_t t) {
    common &= db.transaction(t);
    all |= db.transaction(t);
  });
  if (common.none()) return std::nullopt;

  Bitset rest = all;
  rest.subtract(common);
  bool exclusive = true;
  rest.for_each([&](std::size_t item) {
    if (db.tidset(item).intersection_count(h.members()) != 1) exclusive = false;
  });
  if (!exclusive) return std::nullopt;
  return binomial(rest.count(), k);
}

}  // namespace occm
