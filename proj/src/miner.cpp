#include "occm/miner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace occm {

SupportThreshold SupportThreshold::absolute(std::size_t count) {
  if (count < 1) throw std::invalid_argument("absolute support threshold must be >= 1");
  return SupportThreshold(false, static_cast<double>(count));
}

SupportThreshold SupportThreshold::fraction(double value) {
  if (!(value > 0.0 && value <= 1.0))
    throw std::invalid_argument("fractional support threshold must lie in (0, 1]");
  return SupportThreshold(true, value);
}

SupportThreshold SupportThreshold::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty support threshold");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse support threshold '" + text + "'");
  }
  const std::string rest = text.substr(used);
  if (rest == "%") return fraction(v / 100.0);
  if (!rest.empty()) throw std::invalid_argument("cannot parse support threshold '" + text + "'");
  if (text.find_first_of(".eE") == std::string::npos) {
    if (v < 1.0) throw std::invalid_argument("absolute support threshold must be >= 1");
    return absolute(static_cast<std::size_t>(v));
  }
  return fraction(v);
}

std::size_t SupportThreshold::resolve(std::size_t n) const {
  if (!is_fraction_) return static_cast<std::size_t>(value_);
  // Tolerate representation error in products like 0.3 * 10.
  const double scaled = value_ * static_cast<double>(n);
  const auto c = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
  return std::max<std::size_t>(c, 1);
}

std::string SupportThreshold::to_string() const {
  std::ostringstream os;
  if (is_fraction_)
    os << value_ * 100.0 << '%';
  else
    os << static_cast<std::size_t>(value_);
  return os.str();
}

void canonicalize(PatternCollection& collection) {
  std::vector<std::size_t> order(collection.patterns.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(collection.patterns[a], collection.patterns[b]);
  });
  std::vector<Pattern> patterns;
  std::vector<CoverSet> covers;
  patterns.reserve(order.size());
  covers.reserve(order.size());
  for (auto i : order) {
    patterns.push_back(std::move(collection.patterns[i]));
    if (!collection.covers.empty()) covers.push_back(std::move(collection.covers[i]));
  }
  collection.patterns = std::move(patterns);
  collection.covers = std::move(covers);
}

namespace {

std::size_t resolve_alpha(const TransactionDB& db, const SupportThreshold& alpha) {
  if (db.item_count() > kMaxMiningItems)
    throw CapacityError("universe of " + std::to_string(db.item_count()) +
                        " items exceeds miner capacity of " + std::to_string(kMaxMiningItems));
  const std::size_t resolved = alpha.resolve(db.size());
  if (resolved > db.size())
    throw InfeasibleThresholdError("support threshold " + std::to_string(resolved) +
                                   " exceeds the " + std::to_string(db.size()) + " transactions");
  return resolved;
}

// Depth-first enumeration over ascending item ids. The per-node state is a
// bit-sliced counter of missing items: within[j] holds the transactions that
// miss at most j items of the current prefix, and hit holds those sharing at
// least one item with it. The k-cover is within[k] & hit.
class KrfpSearch {
 public:
  KrfpSearch(const TransactionDB& db, const MiningConfig& cfg, std::size_t alpha,
             MiningStats& stats)
      : db_(db),
        k_(cfg.k),
        alpha_(alpha),
        max_size_(std::min(cfg.max_pattern_size.value_or(db.item_count()), db.item_count())),
        require_closed_(cfg.require_closed),
        verify_(cfg.verify_pruning),
        stats_(stats) {}

  PatternCollection run() {
    std::vector<Bitset> within(k_ + 1, Bitset(db_.size(), true));
    Bitset hit(db_.size());
    Bitset prefix(db_.item_count());
    descend(prefix, 0, 0, within, hit);
    return std::move(out_);
  }

 private:
  void descend(Bitset& prefix, std::size_t depth, std::size_t first_item,
               const std::vector<Bitset>& within, const Bitset& hit) {
    std::vector<Bitset> child(k_ + 1, Bitset(db_.size()));
    for (std::size_t x = first_item; x < db_.item_count(); ++x) {
      const Bitset& tids = db_.tidset(x);
      const Bitset absent = ~tids;
      for (std::size_t j = 0; j <= k_; ++j) {
        child[j] = within[j] & tids;
        if (j > 0) child[j] |= within[j - 1] & absent;
      }
      const Bitset child_hit = hit | tids;
      Bitset cov = child[k_] & child_hit;
      const std::size_t sup = cov.count();
      const std::size_t size = depth + 1;
      ++stats_.nodes;

      prefix.set(x);
      if (sup >= alpha_) {
        Pattern p(prefix);
        if (!require_closed_ || is_closed(p, db_)) {
          out_.patterns.push_back(std::move(p));
          out_.covers.emplace_back(std::move(cov));
        }
      }
      if (size < max_size_) {
        if (size > k_ && sup < alpha_) {
          // |I| > k: every extension's k-cover is a subset of this one.
          ++stats_.pruned_subtrees;
          if (verify_) stats_.pruned_valid += count_valid_extensions(prefix, x + 1, size);
        } else {
          descend(prefix, size, x + 1, child, child_hit);
        }
      }
      prefix.reset(x);
    }
  }

  std::uint64_t count_valid_extensions(Bitset& items, std::size_t first_item, std::size_t size) {
    std::uint64_t found = 0;
    for (std::size_t x = first_item; x < db_.item_count(); ++x) {
      items.set(x);
      if (k_cover_of(items, db_, k_).cardinality() >= alpha_) ++found;
      if (size + 1 < max_size_) found += count_valid_extensions(items, x + 1, size + 1);
      items.reset(x);
    }
    return found;
  }

  const TransactionDB& db_;
  std::size_t k_;
  std::size_t alpha_;
  std::size_t max_size_;
  bool require_closed_;
  bool verify_;
  MiningStats& stats_;
  PatternCollection out_;
};

// Closed itemset enumeration by prefix-preserving closure extension.
class ClosedSearch {
 public:
  ClosedSearch(const TransactionDB& db, std::size_t alpha) : db_(db), alpha_(alpha) {}

  PatternCollection run() {
    Bitset all(db_.size(), true);
    Bitset root = closure_of(CoverSet(all), db_);
    if (root.any()) emit(root, all);
    extend(root, all, 0);
    return std::move(out_);
  }

 private:
  void emit(const Bitset& items, const Bitset& tids) {
    out_.patterns.emplace_back(items);
    out_.covers.emplace_back(tids);
  }

  void extend(const Bitset& items, const Bitset& tids, std::size_t first_item) {
    for (std::size_t e = first_item; e < db_.item_count(); ++e) {
      if (items.test(e)) continue;
      Bitset sub = tids & db_.tidset(e);
      if (sub.count() < alpha_) continue;
      Bitset closed = closure_of(CoverSet(sub), db_);
      Bitset added = closed;
      added.subtract(items);
      // Prefix preservation: the closure may not add items below e.
      if (added.find_first() < e) continue;
      emit(closed, sub);
      extend(closed, sub, e + 1);
    }
  }

  const TransactionDB& db_;
  std::size_t alpha_;
  PatternCollection out_;
};

}  // namespace

PatternCollection mine_krfp(const TransactionDB& db, const MiningConfig& cfg, MiningStats* stats) {
  const std::size_t alpha = resolve_alpha(db, cfg.alpha);
  if (cfg.max_pattern_size && (*cfg.max_pattern_size < 1 || *cfg.max_pattern_size > db.item_count()))
    throw std::invalid_argument("max pattern size must lie in [1, " + std::to_string(db.item_count()) + "]");

  MiningStats local;
  KrfpSearch search(db, cfg, alpha, stats != nullptr ? *stats : local);
  PatternCollection out = search.run();
  out.provenance = Provenance{cfg.k, alpha, db.fingerprint()};
  canonicalize(out);
  return out;
}

PatternCollection mine_closed(const TransactionDB& db, const SupportThreshold& alpha) {
  const std::size_t resolved = resolve_alpha(db, alpha);
  ClosedSearch search(db, resolved);
  PatternCollection out = search.run();
  out.provenance = Provenance{0, resolved, db.fingerprint()};
  canonicalize(out);
  return out;
}

}  // namespace occm
