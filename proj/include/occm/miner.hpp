#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "occm/core.hpp"

namespace occm {

/// Resolved alpha exceeds the number of transactions.
class InfeasibleThresholdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Universe wider than the miner accepts.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest universe mine_krfp / mine_closed accept.
inline constexpr std::size_t kMaxMiningItems = std::size_t{1} << 16;

/// Minimum support, either an absolute transaction count or a fraction of n.
class SupportThreshold {
 public:
  static SupportThreshold absolute(std::size_t count);
  static SupportThreshold fraction(double value);
  /// "3" -> absolute, "0.3" -> fraction, "30%" -> fraction.
  static SupportThreshold parse(const std::string& text);

  bool is_fraction() const { return is_fraction_; }
  double value() const { return value_; }

  /// Absolute count for a database of n transactions. Fractions resolve to
  /// ceil(value * n), clamped below at 1.
  std::size_t resolve(std::size_t n) const;

  std::string to_string() const;

 private:
  SupportThreshold(bool is_fraction, double value) : is_fraction_(is_fraction), value_(value) {}
  bool is_fraction_;
  double value_;
};

struct MiningConfig {
  std::size_t k = 0;
  SupportThreshold alpha = SupportThreshold::absolute(1);
  std::optional<std::size_t> max_pattern_size;
  bool require_closed = false;
  /// Re-enumerate every pruned subtree and count the valid patterns it held.
  /// Exponential; for tests on small inputs only.
  bool verify_pruning = false;
};

struct MiningStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_subtrees = 0;
  /// Valid patterns found inside pruned subtrees (only with verify_pruning).
  std::uint64_t pruned_valid = 0;
};

struct Provenance {
  std::size_t k = 0;
  std::size_t alpha = 1;
  std::uint64_t db_fingerprint = 0;
};

/// A collection of patterns with their cached k-covers (same index).
struct PatternCollection {
  std::vector<Pattern> patterns;
  std::vector<CoverSet> covers;
  Provenance provenance;

  std::size_t size() const { return patterns.size(); }
  bool empty() const { return patterns.empty(); }
};

/// All non-empty I with |I| <= max_pattern_size and Sp^k(I) >= alpha, in
/// canonical order (size, then lexicographic).
PatternCollection mine_krfp(const TransactionDB& db, const MiningConfig& cfg,
                            MiningStats* stats = nullptr);

/// All classical closed itemsets with support >= alpha, canonical order.
PatternCollection mine_closed(const TransactionDB& db, const SupportThreshold& alpha);

/// Sorts patterns (and their covers) into canonical order.
void canonicalize(PatternCollection& collection);

}  // namespace occm
