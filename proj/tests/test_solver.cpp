#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "occm/dataset.hpp"
#include "occm/filter.hpp"
#include "occm/miner.hpp"
#include "occm/solver.hpp"

namespace occm {
namespace {

using testing::pat;
using testing::table1;
using testing::table2;
using testing::tx;

// Independent exhaustive search: every subset of columns of size theta,
// tracked as a bitmask, scored by pairwise disjointness and full coverage.
std::optional<std::int64_t> subset_oracle(const IlpInstance& inst) {
  const std::size_t p = inst.column_count();
  std::optional<std::int64_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != inst.theta) continue;
    std::vector<int> hits(inst.transactions, 0);
    std::int64_t w = 0;
    for (std::size_t j = 0; j < p; ++j) {
      if (!(mask >> j & 1U)) continue;
      w += inst.weights[j];
      for (auto t : inst.columns[j].indices()) ++hits[t];
    }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }) && (!best || w > *best))
      best = w;
  }
  return best;
}

IlpInstance random_instance(std::mt19937_64& rng, std::size_t p, std::size_t n, std::size_t theta) {
  std::vector<CoverSet> cols;
  std::vector<std::int64_t> weights;
  std::uniform_int_distribution<int> wdist(1, 6);
  for (std::size_t j = 0; j < p; ++j) {
    Bitset b(n);
    // Mostly small blocks so that partitions exist.
    const std::size_t len = 1 + rng() % std::max<std::size_t>(1, n / 2);
    const std::size_t start = rng() % n;
    for (std::size_t i = 0; i < len; ++i) b.set((start + i * (1 + rng() % 2)) % n);
    if (rng() % 15 == 0) b.clear_all();
    cols.emplace_back(b);
    weights.push_back(wdist(rng));
  }
  return make_instance(n, std::move(cols), std::move(weights), theta);
}

TEST(Instance, Validation) {
  EXPECT_THROW(make_instance(3, {}, {}, 1), std::invalid_argument);
  EXPECT_THROW(make_instance(3, {CoverSet(Bitset(3))}, {1}, 0), std::invalid_argument);
  EXPECT_THROW(make_instance(3, {CoverSet(Bitset(4))}, {1}, 1), DimensionError);
  EXPECT_THROW(make_instance(3, {CoverSet(Bitset(3))}, {1, 2}, 1), DimensionError);
  EXPECT_THROW(make_instance(3, {CoverSet(Bitset(3))}, {0}, 1), std::invalid_argument);
  const auto inst = make_instance(3, {CoverSet(Bitset(3, {0, 1, 2}))}, {2}, 2);
  EXPECT_TRUE(inst.trivially_infeasible);
  EXPECT_EQ(solve(inst).status, SolveStatus::kInfeasible);
  EXPECT_EQ(brute_force_solve(inst).status, SolveStatus::kInfeasible);
}

TEST(Instance, BuildUsesPatternSizesAndCovers) {
  const auto db = table1();
  PatternCollection c;
  c.patterns = {pat(db, "abce"), pat(db, "gh")};
  const auto inst = build_instance(c, db, 1, 2);
  EXPECT_EQ(inst.weights, (std::vector<std::int64_t>{4, 2}));
  EXPECT_EQ(inst.columns[0], k_cover(pat(db, "abce"), db, 1));
  EXPECT_TRUE(inst.coverage(3, 1));
}

TEST(Solve, Table1PartitionsAllTransactions) {
  const auto db = table1();
  MiningConfig cfg;
  cfg.k = 1;
  cfg.alpha = SupportThreshold::absolute(1);
  const auto inst = build_instance(mine_krfp(db, cfg), db, 1, 2);
  const auto sol = solve(inst);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_TRUE(is_feasible_selection(inst, sol.selected));
  const auto brute = brute_force_solve(inst);
  EXPECT_EQ(sol.objective, brute.objective);
  EXPECT_EQ(sol.selected, brute.selected);
  Bitset all(db.size());
  for (const auto& c : sol.clusters) all |= c.members();
  EXPECT_EQ(all.count(), db.size());
}

TEST(Solve, Table2TwoClusters) {
  const auto db = table2();
  MiningConfig cfg;
  cfg.k = 1;
  cfg.alpha = SupportThreshold::absolute(2);
  const auto inst = build_instance(mine_krfp(db, cfg), db, 1, 2);
  const auto sol = solve(inst);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.objective, brute_force_solve(inst).objective);
  EXPECT_EQ(sol.objective, 8);
}

TEST(Solve, AgreesWithOraclesOnRandomInstances) {
  std::mt19937_64 rng(42);
  int feasible = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t p = 2 + rng() % 15;
    const std::size_t n = 2 + rng() % 9;
    const std::size_t theta = 1 + rng() % 3;
    const auto inst = random_instance(rng, p, n, theta);
    const auto bb = solve(inst);
    const auto brute = brute_force_solve(inst);
    const auto oracle = subset_oracle(inst);
    ASSERT_NE(bb.status, SolveStatus::kTimeout);
    ASSERT_EQ(bb.status == SolveStatus::kOptimal, oracle.has_value()) << "round " << round;
    ASSERT_EQ(brute.status, bb.status);
    if (oracle) {
      ++feasible;
      EXPECT_EQ(bb.objective, *oracle);
      EXPECT_EQ(brute.objective, *oracle);
      EXPECT_EQ(bb.selected, brute.selected) << "round " << round;
      EXPECT_TRUE(is_feasible_selection(inst, bb.selected));
    }
  }
  EXPECT_GT(feasible, 30);
}

TEST(Solve, EmptyColumnsFillRemainingSlots) {
  // One column covers everything; theta = 3 is reachable only with the two
  // empty-cover columns.
  const auto inst = make_instance(4,
                                  {CoverSet(Bitset(4, {0, 1, 2, 3})), CoverSet(Bitset(4)),
                                   CoverSet(Bitset(4)), CoverSet(Bitset(4, {0, 1}))},
                                  {3, 1, 2, 5}, 3);
  const auto sol = solve(inst);
  ASSERT_EQ(sol.status, SolveStatus::kOptimal);
  EXPECT_EQ(sol.selected, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(sol.objective, 6);
  EXPECT_EQ(brute_force_solve(inst).objective, 6);
}

TEST(Solve, TieBreakIsLexSmallestIndexTuple) {
  const auto inst = make_instance(2,
                                  {CoverSet(Bitset(2, {1})), CoverSet(Bitset(2, {0})),
                                   CoverSet(Bitset(2, {0})), CoverSet(Bitset(2, {1}))},
                                  {1, 1, 1, 1}, 2);
  EXPECT_EQ(solve(inst).selected, (std::vector<std::size_t>{0, 1}));
}

TEST(Solve, InfeasibleWhenOverlapIsForced) {
  const auto inst = make_instance(3, {CoverSet(Bitset(3, {0, 1})), CoverSet(Bitset(3, {1, 2}))}, {2, 2}, 2);
  EXPECT_EQ(solve(inst).status, SolveStatus::kInfeasible);
  EXPECT_FALSE(is_feasible_selection(inst, {0, 1}));
}

TEST(Solve, ZeroBudgetTimesOut) {
  // Every pair of 24 transactions, theta = 12: far more than 4096 nodes.
  const std::size_t n = 24;
  std::vector<CoverSet> cols;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) cols.emplace_back(Bitset(n, {a, b}));
  std::vector<std::int64_t> w(cols.size(), 2);
  const auto inst = make_instance(n, std::move(cols), std::move(w), 12);
  const auto sol = solve(inst, std::chrono::duration<double>(0));
  EXPECT_EQ(sol.status, SolveStatus::kTimeout);
  EXPECT_TRUE(sol.selected.empty());
}

TEST(BruteForce, Guardrail) {
  std::vector<CoverSet> cols(60, CoverSet(Bitset(5, {0})));
  const auto inst = make_instance(5, cols, std::vector<std::int64_t>(60, 1), 10);
  EXPECT_THROW(brute_force_solve(inst), GuardrailError);
  EXPECT_THROW(brute_force_solve(make_instance(5, cols, std::vector<std::int64_t>(60, 1), 2), 100),
               GuardrailError);
}

TEST(Solve, FilteringPreservesOptimum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto db = random_db(seed, 8, 7, 0.35);
    for (std::size_t theta : {2u, 3u}) {
      MiningConfig cfg;
      cfg.k = 1;
      cfg.alpha = SupportThreshold::absolute(1);
      cfg.max_pattern_size = 4;
      const auto all = mine_krfp(db, cfg);
      const auto filtered = filter_redundant(all, db, 1).patterns;
      const auto a = solve(build_instance(all, db, 1, theta));
      const auto b = solve(build_instance(filtered, db, 1, theta));
      ASSERT_EQ(a.status, b.status);
      if (a.status == SolveStatus::kOptimal) EXPECT_EQ(a.objective, b.objective);
    }
  }
}

TEST(WriteLp, ContainsModel) {
  const auto inst = make_instance(2, {CoverSet(Bitset(2, {0})), CoverSet(Bitset(2, {0, 1}))}, {3, 1}, 1);
  std::ostringstream os;
  write_lp(inst, os);
  const auto text = os.str();
  EXPECT_NE(text.find("Maximize\n obj: 3 x0 + 1 x1"), std::string::npos);
  EXPECT_NE(text.find(" t0: x0 + x1 = 1"), std::string::npos);
  EXPECT_NE(text.find(" t1: x1 = 1"), std::string::npos);
  EXPECT_NE(text.find(" theta: x0 + x1 = 1"), std::string::npos);
  EXPECT_NE(text.find("Binary\n x0 x1\nEnd"), std::string::npos);
}

TEST(SolveStatus, Names) {
  EXPECT_EQ(to_string(SolveStatus::kOptimal), "optimal");
  EXPECT_EQ(to_string(SolveStatus::kInfeasible), "infeasible");
  EXPECT_EQ(to_string(SolveStatus::kTimeout), "timeout");
}

}  // namespace
}  // namespace occm
