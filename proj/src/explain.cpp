#include "occm/explain.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace occm {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational importance(const Pattern& pattern, const TransactionDB& db, std::size_t k) {
  const CoverSet c = k_cover(pattern, db, k);
  std::int64_t present = 0;
  c.members().for_each([&](std::size_t t) {
    present += static_cast<std::int64_t>(pattern.items().intersection_count(db.transaction(t)));
  });
  return Rational(present, static_cast<std::int64_t>(pattern.size()));
}

ShapleyValues shapley(const Pattern& pattern, const TransactionDB& db, std::size_t k,
                      std::size_t item_cap) {
  const std::vector<ItemId> items = pattern.item_ids();
  const std::size_t m = items.size();
  if (m > item_cap || m > 30)
    throw ShapleyCapError("exact Shapley values limited to " + std::to_string(item_cap) +
                          " items, pattern has " + std::to_string(m));
  if (pattern.universe_size() != db.item_count())
    throw DimensionError("pattern width does not match universe size");

  // Transactions grouped by which pattern items they contain.
  std::unordered_map<std::uint32_t, std::int64_t> groups;
  for (const auto& tx : db.transactions()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (tx.test(items[i])) mask |= std::uint32_t{1} << i;
    if (mask != 0) ++groups[mask];
  }

  // present[S] = sum over tau in Cov^k(S) of |S n tau|, so v(S) = present[S] / |S|.
  const std::uint32_t full = m == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
  std::vector<std::int64_t> present(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    std::int64_t acc = 0;
    for (const auto& [mask, count] : groups) {
      const auto hit = static_cast<std::size_t>(std::popcount(s & mask));
      if (hit > 0 && size - hit <= k) acc += count * static_cast<std::int64_t>(hit);
    }
    present[s] = acc;
  }

  // Coalition weight |S|! (m - |S| - 1)! / m!.
  std::vector<Rational> weight(m);
  {
    std::vector<boost::multiprecision::cpp_int> fact(m + 1, 1);
    for (std::size_t i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
    for (std::size_t s = 0; s < m; ++s) weight[s] = Rational(fact[s] * fact[m - s - 1], fact[m]);
  }

  ShapleyValues out;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    // with[s]: sum of present[S u {a}], without[s]: sum of present[S], over
    // |S| = s, a not in S.
    std::vector<std::int64_t> with(m, 0), without(m, 0);
    for (std::uint32_t s = 0; s <= full; ++s) {
      if ((s & bit) != 0) continue;
      const auto size = static_cast<std::size_t>(std::popcount(s));
      with[size] += present[s | bit];
      without[size] += present[s];
    }
    Rational phi = 0;
    for (std::size_t s = 0; s < m; ++s) {
      Rational marginal(with[s], static_cast<std::int64_t>(s + 1));
      if (s > 0) marginal -= Rational(without[s], static_cast<std::int64_t>(s));
      phi += weight[s] * marginal;
    }
    out.emplace(items[i], std::move(phi));
  }
  return out;
}

Rational svv(const ShapleyValues& values) {
  if (values.empty()) throw std::invalid_argument("svv of an empty set of Shapley values");
  const auto m = static_cast<std::int64_t>(values.size());
  Rational mean = 0;
  for (const auto& [item, phi] : values) mean += phi;
  mean /= m;
  Rational var = 0;
  for (const auto& [item, phi] : values) {
    const Rational d = phi - mean;
    var += d * d;
  }
  return var / m;
}

Rational jaccard(const CoverSet& a, const CoverSet& b) {
  const Bitset& x = a.members();
  const Bitset& y = b.members();
  const std::size_t inter = x.intersection_count(y);
  const std::size_t uni = x.count() + y.count() - inter;
  if (uni == 0) return Rational(1);
  return Rational(static_cast<std::int64_t>(inter), static_cast<std::int64_t>(uni));
}

namespace {

Rational acs_impl(const Pattern& pattern, const CoverSet& cluster, const TransactionDB& db,
                  std::size_t k, bool& degenerate) {
  Rational sum = 0;
  Bitset reduced = pattern.items();
  pattern.items().for_each([&](std::size_t item) {
    reduced.reset(item);
    const CoverSet without = k_cover_of(reduced, db, k);
    if (cluster.empty() && without.empty()) degenerate = true;
    sum += jaccard(cluster, without);
    reduced.set(item);
  });
  return sum / static_cast<std::int64_t>(pattern.size());
}

}  // namespace

Rational acs(const Pattern& pattern, const TransactionDB& db, std::size_t k) {
  bool degenerate = false;
  return acs_impl(pattern, k_cover(pattern, db, k), db, k, degenerate);
}

ExplanationReport explain(const Pattern& pattern, const TransactionDB& db, std::size_t k,
                          std::size_t item_cap) {
  CoverSet cluster = k_cover(pattern, db, k);
  ShapleyValues phi = shapley(pattern, db, k, item_cap);
  Rational variance = svv(phi);
  bool degenerate = false;
  Rational stability = acs_impl(pattern, cluster, db, k, degenerate);
  return ExplanationReport{pattern,      std::move(cluster),    importance(pattern, db, k),
                           std::move(phi), std::move(variance), std::move(stability),
                           degenerate};
}

}  // namespace occm
