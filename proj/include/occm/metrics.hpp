#pragma once

#include <cstddef>
#include <vector>

#include "occm/dataset.hpp"
#include "occm/explain.hpp"
#include "occm/solver.hpp"

namespace occm {

/// Maximum-weight perfect matching on a square matrix (rows to columns).
/// Returns assignment[row] = column.
std::vector<std::size_t> max_weight_assignment(const std::vector<std::vector<Rational>>& weight);

/// 2|a n b| / (|a| + |b|); 0 when both are empty.
Rational pair_f1(const CoverSet& predicted, const CoverSet& actual);

/// Macro-averaged F1 under the cluster-to-class bijection that maximizes it.
/// Requires an optimal solution and exactly theta label classes.
Rational f1_score(const ClusteringSolution& solution, const Labels& labels);

}  // namespace occm
