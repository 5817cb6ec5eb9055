#include "occm/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>

#include "occm/filter.hpp"

namespace occm {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

IlpInstance make_instance(std::size_t transactions, std::vector<CoverSet> columns,
                          std::vector<std::int64_t> weights, std::size_t theta) {
  if (transactions == 0) throw std::invalid_argument("instance needs at least one transaction");
  if (columns.empty()) throw std::invalid_argument("instance needs at least one candidate pattern");
  if (theta < 1) throw std::invalid_argument("theta must be >= 1");
  if (weights.size() != columns.size()) throw DimensionError("weights and columns differ in length");
  for (const auto& c : columns)
    if (c.universe_size() != transactions) throw DimensionError("column width does not match transaction count");
  for (auto w : weights)
    if (w < 1) throw std::invalid_argument("pattern weights must be >= 1");

  IlpInstance inst;
  inst.transactions = transactions;
  inst.columns = std::move(columns);
  inst.weights = std::move(weights);
  inst.theta = theta;
  inst.trivially_infeasible = theta > inst.columns.size();
  return inst;
}

IlpInstance build_instance(const PatternCollection& patterns, const TransactionDB& db,
                           std::size_t k, std::size_t theta) {
  if (patterns.empty()) throw std::invalid_argument("cannot build an instance from an empty pattern list");
  const bool cached = patterns.covers.size() == patterns.size() && patterns.provenance.k == k &&
                      patterns.provenance.db_fingerprint == db.fingerprint();
  std::vector<CoverSet> columns;
  std::vector<std::int64_t> weights;
  columns.reserve(patterns.size());
  weights.reserve(patterns.size());
  for (std::size_t j = 0; j < patterns.size(); ++j) {
    columns.push_back(cached ? patterns.covers[j] : k_cover(patterns.patterns[j], db, k));
    weights.push_back(static_cast<std::int64_t>(patterns.patterns[j].size()));
  }
  return make_instance(db.size(), std::move(columns), std::move(weights), theta);
}

bool is_feasible_selection(const IlpInstance& instance, const std::vector<std::size_t>& selected) {
  if (selected.size() != instance.theta) return false;
  std::vector<std::size_t> sorted = selected;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  Bitset covered(instance.transactions);
  for (auto j : sorted) {
    if (j >= instance.column_count()) return false;
    if (covered.intersects(instance.columns[j].members())) return false;
    covered |= instance.columns[j].members();
  }
  return covered.count() == instance.transactions;
}

namespace {

ClusteringSolution finish(const IlpInstance& instance, SolveStatus status,
                          std::vector<std::size_t> selected, std::uint64_t nodes) {
  ClusteringSolution sol;
  sol.status = status;
  sol.nodes = nodes;
  if (status == SolveStatus::kOptimal) {
    std::sort(selected.begin(), selected.end());
    for (auto j : selected) {
      sol.objective += instance.weights[j];
      sol.clusters.push_back(instance.columns[j]);
    }
    sol.selected = std::move(selected);
  }
  return sol;
}

class BranchAndBound {
 public:
  BranchAndBound(const IlpInstance& inst, std::chrono::duration<double> budget)
      : inst_(inst),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget)),
        by_transaction_(inst.transactions) {
    for (std::size_t j = 0; j < inst.column_count(); ++j) {
      if (inst.columns[j].empty()) {
        empty_.push_back(j);
      } else {
        inst.columns[j].members().for_each([&](std::size_t t) { by_transaction_[t].push_back(j); });
        by_weight_.push_back(j);
      }
    }
    auto heavier = [&](std::size_t a, std::size_t b) {
      if (inst.weights[a] != inst.weights[b]) return inst.weights[a] > inst.weights[b];
      return a < b;
    };
    std::sort(empty_.begin(), empty_.end(), heavier);
    std::sort(by_weight_.begin(), by_weight_.end(), heavier);
  }

  ClusteringSolution run() {
    Bitset covered(inst_.transactions);
    std::vector<std::size_t> chosen;
    search(covered, chosen, 0);
    if (timed_out_) return finish(inst_, SolveStatus::kTimeout, {}, nodes_);
    if (!have_best_) return finish(inst_, SolveStatus::kInfeasible, {}, nodes_);
    return finish(inst_, SolveStatus::kOptimal, best_, nodes_);
  }

 private:
  void search(Bitset& covered, std::vector<std::size_t>& chosen, std::int64_t weight) {
    if (timed_out_) return;
    if ((++nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }

    const std::size_t remaining = inst_.theta - chosen.size();
    const std::size_t first_open = (~covered).find_first();
    if (first_open == inst_.transactions) {
      close_with_empty_columns(chosen, weight, remaining);
      return;
    }
    if (remaining == 0) return;

    // Bound: current weight plus the `remaining` heaviest columns still
    // compatible with the covered set, empty columns included. Ties with the
    // incumbent are explored for the index tie-break.
    const auto bound = compatible_bound(covered, weight, remaining);
    if (!bound || (have_best_ && *bound < best_weight_)) return;

    for (auto j : by_transaction_[first_open]) {
      const Bitset& col = inst_.columns[j].members();
      if (col.intersects(covered)) continue;
      covered |= col;
      chosen.push_back(j);
      search(covered, chosen, weight + inst_.weights[j]);
      chosen.pop_back();
      covered.subtract(col);
      if (timed_out_) return;
    }
  }

  std::optional<std::int64_t> compatible_bound(const Bitset& covered, std::int64_t weight,
                                               std::size_t remaining) const {
    std::int64_t bound = weight;
    std::size_t taken = 0;
    std::size_t e = 0;
    for (auto j : by_weight_) {
      if (taken == remaining) break;
      if (inst_.columns[j].members().intersects(covered)) continue;
      while (taken < remaining && e < empty_.size() && inst_.weights[empty_[e]] > inst_.weights[j]) {
        bound += inst_.weights[empty_[e++]];
        ++taken;
      }
      if (taken == remaining) break;
      bound += inst_.weights[j];
      ++taken;
    }
    while (taken < remaining && e < empty_.size()) {
      bound += inst_.weights[empty_[e++]];
      ++taken;
    }
    if (taken < remaining) return std::nullopt;
    return bound;
  }

  void close_with_empty_columns(const std::vector<std::size_t>& chosen, std::int64_t weight,
                                std::size_t remaining) {
    if (remaining > empty_.size()) return;
    std::vector<std::size_t> selection = chosen;
    for (std::size_t e = 0; e < remaining; ++e) {
      selection.push_back(empty_[e]);
      weight += inst_.weights[empty_[e]];
    }
    std::sort(selection.begin(), selection.end());
    if (!have_best_ || weight > best_weight_ || (weight == best_weight_ && selection < best_)) {
      have_best_ = true;
      best_weight_ = weight;
      best_ = std::move(selection);
    }
  }

  const IlpInstance& inst_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::vector<std::size_t>> by_transaction_;
  std::vector<std::size_t> by_weight_;
  std::vector<std::size_t> empty_;

  bool have_best_ = false;
  std::int64_t best_weight_ = 0;
  std::vector<std::size_t> best_;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ClusteringSolution solve(const IlpInstance& instance, std::chrono::duration<double> time_budget) {
  if (instance.trivially_infeasible || instance.theta > instance.column_count())
    return finish(instance, SolveStatus::kInfeasible, {}, 0);
  BranchAndBound bb(instance, time_budget);
  return bb.run();
}

ClusteringSolution brute_force_solve(const IlpInstance& instance, std::uint64_t subset_cap) {
  const std::size_t p = instance.column_count();
  const std::size_t theta = instance.theta;
  if (theta > p) return finish(instance, SolveStatus::kInfeasible, {}, 0);
  const std::uint64_t subsets = binomial(p, theta);
  if (subsets > subset_cap)
    throw GuardrailError("C(" + std::to_string(p) + ", " + std::to_string(theta) + ") = " +
                         std::to_string(subsets) + " subsets exceeds the cap of " +
                         std::to_string(subset_cap));

  std::vector<std::size_t> combo(theta);
  std::iota(combo.begin(), combo.end(), 0);
  bool found = false;
  std::int64_t best_weight = 0;
  std::vector<std::size_t> best;
  std::uint64_t visited = 0;
  Bitset covered(instance.transactions);
  while (true) {
    ++visited;
    covered.clear_all();
    bool ok = true;
    std::int64_t weight = 0;
    for (auto j : combo) {
      const Bitset& col = instance.columns[j].members();
      if (covered.intersects(col)) {
        ok = false;
        break;
      }
      covered |= col;
      weight += instance.weights[j];
    }
    if (ok && covered.count() == instance.transactions && (!found || weight > best_weight)) {
      found = true;
      best_weight = weight;
      best = combo;
    }

    // Next combination in lexicographic order.
    std::size_t i = theta;
    while (i > 0 && combo[i - 1] == p - theta + (i - 1)) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < theta; ++j) combo[j] = combo[j - 1] + 1;
  }
  if (!found) return finish(instance, SolveStatus::kInfeasible, {}, visited);
  return finish(instance, SolveStatus::kOptimal, best, visited);
}

void write_lp(const IlpInstance& instance, std::ostream& os) {
  os << "\\ set partitioning: " << instance.transactions << " transactions, "
     << instance.column_count() << " patterns, theta = " << instance.theta << "\n";
  os << "Maximize\n obj:";
  for (std::size_t j = 0; j < instance.column_count(); ++j)
    os << (j == 0 ? " " : " + ") << instance.weights[j] << " x" << j;
  os << "\nSubject To\n";
  for (std::size_t t = 0; t < instance.transactions; ++t) {
    os << " t" << t << ":";
    bool any = false;
    for (std::size_t j = 0; j < instance.column_count(); ++j) {
      if (!instance.coverage(t, j)) continue;
      os << (any ? " + " : " ") << "x" << j;
      any = true;
    }
    if (!any) os << " 0 x0";
    os << " = 1\n";
  }
  os << " theta:";
  for (std::size_t j = 0; j < instance.column_count(); ++j) os << (j == 0 ? " " : " + ") << "x" << j;
  os << " = " << instance.theta << "\nBinary\n";
  for (std::size_t j = 0; j < instance.column_count(); ++j) os << " x" << j;
  os << "\nEnd\n";
}

}  // namespace occm
