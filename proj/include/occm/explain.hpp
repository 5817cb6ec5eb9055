#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "occm/core.hpp"

namespace occm {

using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// Imp(I) = sum over tau in Cov^k(I) of |I n tau| / |I|.
Rational importance(const Pattern& pattern, const TransactionDB& db, std::size_t k);

/// Largest pattern for which exact Shapley values are computed (2^|I| subsets).
inline constexpr std::size_t kShapleyItemCap = 20;

class ShapleyCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

using ShapleyValues = std::map<ItemId, Rational>;

/// Exact Shapley values of the items of `pattern` in the game v(S) = Imp(S),
/// v(empty) = 0.
ShapleyValues shapley(const Pattern& pattern, const TransactionDB& db, std::size_t k,
                      std::size_t item_cap = kShapleyItemCap);

/// Population variance of the values.
Rational svv(const ShapleyValues& values);

/// |a n b| / |a u b|, and 1 when both are empty.
Rational jaccard(const CoverSet& a, const CoverSet& b);

/// Mean over items a of Jaccard(Cov^k(I), Cov^k(I \ {a})). The k-cover of
/// the empty itemset is empty, so single-item patterns with a non-empty cover
/// score 0.
Rational acs(const Pattern& pattern, const TransactionDB& db, std::size_t k);

struct ExplanationReport {
  Pattern pattern;
  CoverSet cluster;
  Rational importance;
  ShapleyValues shapley;
  Rational svv;
  Rational acs;
  /// True when some leave-one-out Jaccard compared two empty covers.
  bool degenerate_jaccard = false;
};

ExplanationReport explain(const Pattern& pattern, const TransactionDB& db, std::size_t k,
                          std::size_t item_cap = kShapleyItemCap);

}  // namespace occm
