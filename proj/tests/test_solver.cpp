#include <gtest/gtest.h>

#include <random>

#include "pebble/solver.hpp"
#include "support/oracles.hpp"

using namespace pebble;

namespace {

oracle::Counts counts_of(const Distribution& d) { return {d.counts().begin(), d.counts().end()}; }

void expect_valid_witness(const Graph& g, const Distribution& d, const SolveQuery& q, const SolveResult& r) {
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->start, d);
  EXPECT_EQ(replay(g, d, r.witness->moves), r.witness->end);
  EXPECT_GE(r.witness->end[q.root], q.t);
  EXPECT_EQ(r.witness->end.size() + r.witness->cost(), d.size());
  if (q.policy == MovePolicy::greedy) {
    auto dist = distances_from(g, q.root);
    for (const auto& mv : r.witness->moves) EXPECT_LT(dist[mv.to], dist[mv.from]);
  }
}

}  // namespace

TEST(Solver, CycleExamples) {
  auto g = build_cycle(4);
  auto r = is_solvable(g, parse_distribution(g, "v2=4"), SolveQuery{0});
  EXPECT_TRUE(r.solvable());
  expect_valid_witness(g, parse_distribution(g, "v2=4"), SolveQuery{0}, r);
  auto u = is_solvable(g, parse_distribution(g, "v2=3"), SolveQuery{0});
  EXPECT_TRUE(u.unsolvable());
  EXPECT_NE(u.certificate, Certificate::none);
}

TEST(Solver, TrivialWhenRootHoldsEnough) {
  auto g = build_path(3);
  auto r = is_solvable(g, Distribution(g, {2, 0, 0, 0}), SolveQuery{0, 2});
  EXPECT_TRUE(r.solvable());
  EXPECT_TRUE(r.witness->moves.empty());
}

TEST(Solver, WeightCertificate) {
  auto g = build_path(3);
  // 7 pebbles at distance 3 have floor weight 0 at v0
  auto w = weight_certificate(g, Distribution(g, {0, 0, 0, 7}), 0, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->floor_weight, 0u);
  EXPECT_FALSE(weight_certificate(g, Distribution(g, {0, 0, 0, 8}), 0, 1).has_value());
  auto r = is_solvable(g, Distribution(g, {0, 0, 0, 7}), SolveQuery{0});
  EXPECT_TRUE(r.unsolvable());
  EXPECT_EQ(r.certificate, Certificate::weight_bound);
}

TEST(Solver, GreedyFailsWhereUnrestrictedSucceeds) {
  auto g = build_jahangir(2, 3);
  auto d = parse_distribution(g, "v1=3,v5=3,v0=1,u=1");
  auto greedy = is_solvable(g, d, SolveQuery{3, 1, MovePolicy::greedy});
  auto free = is_solvable(g, d, SolveQuery{3, 1, MovePolicy::unrestricted});
  EXPECT_TRUE(greedy.unsolvable());
  EXPECT_TRUE(free.solvable());
  expect_valid_witness(g, d, SolveQuery{3}, free);
}

TEST(Solver, BudgetExhaustionIsUnknown) {
  auto g = build_jahangir(2, 8);
  auto d = parse_distribution(g, "v3=1,v5=3,v7=1,v9=15,v11=1,v13=3,v15=1");
  SolverOptions opts;
  opts.state_budget = 10;
  auto r = is_solvable(g, d, SolveQuery{1}, opts);
  EXPECT_EQ(r.outcome, Outcome::unknown);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Solver, RejectsBadQueries) {
  auto g = build_cycle(4);
  EXPECT_THROW(Solver(g, SolveQuery{9}), ParameterError);
  EXPECT_THROW(Solver(g, SolveQuery{0, 0}), ParameterError);
  EXPECT_THROW(is_solvable(g, Distribution(build_path(3)), SolveQuery{0}), GraphMismatch);
}

TEST(Solver, MovesAndText) {
  auto g = build_cycle(4);
  Distribution d(g, {0, 0, 4, 0});
  EXPECT_THROW(apply_move(g, d, Move{2, 0}), MoveError);
  EXPECT_THROW(apply_move(g, d, Move{1, 0}), MoveError);
  auto next = apply_move(g, d, Move{2, 1});
  EXPECT_EQ(next, Distribution(g, {0, 1, 2, 0}));
  std::vector<Move> moves{{2, 1}, {2, 1}, {1, 0}};
  EXPECT_EQ(to_text(g, moves), "v2->v1,v2->v1,v1->v0");
  EXPECT_EQ(parse_moves(g, to_text(g, moves)), moves);
  EXPECT_THROW(parse_moves(g, "v2-v1"), ParseError);
  EXPECT_EQ(replay(g, d, moves), Distribution(g, {1, 0, 0, 0}));
}

TEST(Solver, AgreesWithBlindOracleOnRandomInstances) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto n = std::uniform_int_distribution<std::uint32_t>(1, 7)(rng);
    auto g = oracle::random_connected_graph(rng, n, 0.3);
    const auto k = std::uniform_int_distribution<Count>(0, 9)(rng);
    auto d = sample_distribution(g, k, rng);
    const Vertex root = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    const Count t = std::uniform_int_distribution<Count>(1, 2)(rng);
    const bool greedy = trial % 3 == 0;
    SolveQuery q{root, t, greedy ? MovePolicy::greedy : MovePolicy::unrestricted};
    auto r = is_solvable(g, d, q);
    const bool expected = oracle::blind_solvable(g, counts_of(d), root, t, greedy);
    ASSERT_NE(r.outcome, Outcome::unknown);
    ASSERT_EQ(r.solvable(), expected) << "trial " << trial << " " << to_text(g, d) << " root " << root;
    if (r.solvable()) expect_valid_witness(g, d, q, r);
  }
}

TEST(Solver, PruningSwitchesDoNotChangeAnswers) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = std::uniform_int_distribution<std::uint32_t>(2, 8)(rng);
    auto g = oracle::random_connected_graph(rng, n, 0.2);
    auto d = sample_distribution(g, std::uniform_int_distribution<Count>(0, 12)(rng), rng);
    SolveQuery q{std::uniform_int_distribution<Vertex>(0, n - 1)(rng)};
    SolverOptions none;
    none.weight_pruning = none.transposition_table = none.dominance_pruning = false;
    const bool base = is_solvable(g, d, q, none).solvable();
    for (int mask = 1; mask < 8; ++mask) {
      SolverOptions o;
      o.weight_pruning = mask & 1;
      o.transposition_table = mask & 2;
      o.dominance_pruning = mask & 4;
      ASSERT_EQ(is_solvable(g, d, q, o).solvable(), base);
    }
  }
}

TEST(Solver, ReusedSolverKeepsAnswersStable) {
  std::mt19937_64 rng(5);
  auto g = build_jahangir(2, 4);
  Solver s(g, SolveQuery{1});
  std::vector<Distribution> ds;
  std::vector<bool> first;
  for (int i = 0; i < 150; ++i) {
    ds.push_back(sample_distribution(g, std::uniform_int_distribution<Count>(4, 16)(rng), rng));
    first.push_back(s.solve(ds.back()).solvable());
  }
  EXPECT_GT(s.memo_size(), 0u);
  for (std::size_t i = ds.size(); i-- > 0;) {
    ASSERT_EQ(s.solve(ds[i]).solvable(), first[i]);
    ASSERT_EQ(is_solvable(g, ds[i], SolveQuery{1}).solvable(), first[i]);
  }
}

TEST(Solver, PolicyText) {
  EXPECT_EQ(parse_policy("greedy"), MovePolicy::greedy);
  EXPECT_EQ(to_string(MovePolicy::unrestricted), "unrestricted");
  EXPECT_THROW(parse_policy("lazy"), ParameterError);
  EXPECT_EQ(to_string(Certificate::weight_bound), "weight-bound");
}
