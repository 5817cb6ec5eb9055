#include "occm/metrics.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace occm {

std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<Rational>>& weight) {
  // Hungarian method (potentials, O(n^3)) minimizing the negated weights.
  const std::size_t n = weight.size();
  for (const auto& row : weight)
    if (row.size() != n) throw DimensionError("assignment matrix must be square");
  if (n == 0) return {};

  auto cost = [&](std::size_t i, std::size_t j) -> Rational { return -weight[i - 1][j - 1]; };
  std::vector<Rational> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<Rational> minv(n + 1, 0);
    std::vector<bool> has_min(n + 1, false);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost(i0, j) - u[i0] - v[j];
        if (!has_min[j] || cur < minv[j]) {
          minv[j] = cur;
          has_min[j] = true;
          way[j] = j0;
        }
        if (!delta || minv[j] < *delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else {
          minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[match[j] - 1] = j - 1;
  return assignment;
}

Rational pair_f1(const CoverSet& predicted, const CoverSet& actual) {
  const std::size_t denom = predicted.cardinality() + actual.cardinality();
  if (denom == 0) return 0;
  const std::size_t inter = predicted.members().intersection_count(actual.members());
  return Rational(static_cast<std::int64_t>(2 * inter), static_cast<std::int64_t>(denom));
}

Rational f1_score(const ClusteringSolution& solution, const Labels& labels) {
  if (solution.status != SolveStatus::kOptimal)
    throw std::invalid_argument("F1 needs an optimal clustering");
  const std::size_t theta = solution.clusters.size();
  if (labels.classes() != theta)
    throw std::invalid_argument("labels have " + std::to_string(labels.classes()) +
                                " classes but the clustering has " + std::to_string(theta) +
                                " clusters");
  const std::size_t n = labels.ids.size();
  for (const auto& c : solution.clusters)
    if (c.universe_size() != n) throw DimensionError("label count does not match transaction count");

  std::vector<Bitset> classes(theta, Bitset(n));
  for (std::size_t t = 0; t < n; ++t) classes[labels.ids[t]].set(t);

  std::vector<std::vector<Rational>> table(theta, std::vector<Rational>(theta));
  for (std::size_t i = 0; i < theta; ++i)
    for (std::size_t j = 0; j < theta; ++j) table[i][j] = pair_f1(solution.clusters[i], CoverSet(classes[j]));

  const auto assignment = max_weight_assignment(table);
  Rational total = 0;
  for (std::size_t i = 0; i < theta; ++i) total += table[i][assignment[i]];
  return total / static_cast<std::int64_t>(theta);
}

}  // namespace occm
