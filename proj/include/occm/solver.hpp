#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "occm/core.hpp"
#include "occm/miner.hpp"

namespace occm {

/// Set-partitioning model: choose exactly theta columns such that every
/// transaction lies in exactly one chosen column, maximizing total weight.
/// Column j of the coverage matrix is the k-cover of pattern j.
struct IlpInstance {
  std::size_t transactions = 0;
  std::vector<CoverSet> columns;
  std::vector<std::int64_t> weights;
  std::size_t theta = 1;
  /// Set when theta exceeds the number of columns.
  bool trivially_infeasible = false;

  std::size_t column_count() const { return columns.size(); }
  bool coverage(std::size_t transaction, std::size_t column) const {
    return columns[column].contains(transaction);
  }
};

/// Validates shapes and recomputes the infeasibility flag.
IlpInstance make_instance(std::size_t transactions, std::vector<CoverSet> columns,
                          std::vector<std::int64_t> weights, std::size_t theta);

/// Coverage matrix from the collection's cached k-covers when they were
/// computed for this k and database, otherwise from fresh k-covers. Weights
/// are pattern sizes.
IlpInstance build_instance(const PatternCollection& patterns, const TransactionDB& db,
                           std::size_t k, std::size_t theta);

enum class SolveStatus { kOptimal, kInfeasible, kTimeout };
std::string to_string(SolveStatus status);

struct ClusteringSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  /// Ascending column indices.
  std::vector<std::size_t> selected;
  std::int64_t objective = 0;
  std::vector<CoverSet> clusters;
  std::uint64_t nodes = 0;
};

/// True iff `selected` has theta distinct columns whose covers partition all
/// transactions.
bool is_feasible_selection(const IlpInstance& instance, const std::vector<std::size_t>& selected);

/// Exact branch-and-bound. Branches on the lowest uncovered transaction over
/// the compatible columns covering it; bounds with the current weight plus
/// the largest remaining compatible weights. Among co-optimal selections the
/// lexicographically smallest ascending index tuple is returned.
ClusteringSolution solve(const IlpInstance& instance,
                         std::chrono::duration<double> time_budget = std::chrono::hours(1));

/// Raised when exhaustive enumeration would exceed its subset cap.
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kBruteForceSubsetCap = 10'000'000;

/// Enumerates every theta-subset of columns in lexicographic order.
ClusteringSolution brute_force_solve(const IlpInstance& instance,
                                     std::uint64_t subset_cap = kBruteForceSubsetCap);

/// CPLEX LP text rendering of the model, for cross-checking with external
/// solvers.
void write_lp(const IlpInstance& instance, std::ostream& os);

}  // namespace occm
