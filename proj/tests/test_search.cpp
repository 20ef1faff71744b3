#include <doctest.h>

#include <random>

#include "gedforge/data/synthetic.hpp"
#include "gedforge/heuristics.hpp"
#include "gedforge/search.hpp"
#include "oracle.hpp"

using namespace gedforge;

namespace {

std::vector<Graph> corpus(int count, int min_n, int max_n, int labels, std::uint64_t seed) {
  data::SyntheticConfig cfg;
  cfg.count = count;
  cfg.min_nodes = min_n;
  cfg.max_nodes = max_n;
  cfg.edge_prob = 0.5;
  cfg.label_count = labels;
  cfg.seed = seed;
  return data::generate_synthetic(cfg);
}

}  // namespace

TEST_CASE("identical graphs solve to zero with an identity path") {
  const auto graphs = corpus(6, 2, 6, 0, 21);
  auto zero = make_zero_heuristic();
  for (const Graph& g : graphs) {
    const SolveResult r = astar_solve(g, g, EditCostModel::unlabeled(), *zero);
    REQUIRE(r.ok());
    CHECK(r.ged == 0.0);
    CHECK(r.stats.optimal_found);
    for (const EditOp& op : r.path.ops) {
      CHECK(op.kind == EditOpKind::NodeSub);
      CHECK(op.u == op.v);
    }
  }
}

TEST_CASE("A* equals brute force on random pairs") {
  const auto graphs = corpus(24, 2, 5, 2, 22);
  auto zero = make_zero_heuristic();
  auto hungarian = make_hungarian_heuristic();
  std::mt19937_64 rng(23);

  for (const EditCostModel& cost :
       {EditCostModel::uniform_label(), EditCostModel::unlabeled()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Graph& g1 = graphs[rng() % graphs.size()];
      const Graph& g2 = graphs[rng() % graphs.size()];
      const double opt = testing::brute_force_ged(g1, g2, cost);
      const SolveResult a = astar_solve(g1, g2, cost, *zero);
      const SolveResult b = astar_solve(g1, g2, cost, *hungarian);
      REQUIRE(a.ok());
      REQUIRE(b.ok());
      CHECK(a.ged == opt);
      CHECK(b.ged == opt);
      CHECK(path_cost(g1, g2, cost, a.path) == a.ged);
      CHECK(is_complete_path(g1, g2, a.path));
      CHECK(b.stats.states_enqueued <= a.stats.states_enqueued * 2);  // sanity, not dominance
    }
  }
}

TEST_CASE("geometric cost with mismatched sizes is infeasible") {
  Graph g1("a", {"", "", ""}, {{0, 1}, {1, 2}});
  Graph g2("b", {"", ""}, {{0, 1}});
  auto zero = make_zero_heuristic();
  const SolveResult r = astar_solve(g1, g2, EditCostModel::geometric(), *zero);
  CHECK(r.status == SolveStatus::Infeasible);
}

TEST_CASE("geometric cost on equal sizes matches brute force") {
  data::SyntheticConfig cfg;
  cfg.count = 12;
  cfg.min_nodes = 4;
  cfg.max_nodes = 4;
  cfg.edge_prob = 0.6;
  cfg.geometric_weights = true;
  cfg.seed = 31;
  auto graphs = data::generate_synthetic(cfg);
  for (Graph& g : graphs) g = g.with_normalized_weights(300.0);

  auto hungarian = make_hungarian_heuristic();
  const EditCostModel cost = EditCostModel::geometric();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph& g1 = graphs[rng() % graphs.size()];
    const Graph& g2 = graphs[rng() % graphs.size()];
    const double opt = testing::brute_force_ged(g1, g2, cost);
    const SolveResult r = astar_solve(g1, g2, cost, *hungarian);
    REQUIRE(r.ok());
    CHECK(r.ged == doctest::Approx(opt).epsilon(1e-12));
  }
}

TEST_CASE("empty graphs produce the empty path") {
  Graph empty("e", std::vector<std::string>{}, {});
  auto zero = make_zero_heuristic();
  const SolveResult r = astar_solve(empty, empty, EditCostModel::unlabeled(), *zero);
  REQUIRE(r.ok());
  CHECK(r.ged == 0.0);
  CHECK(r.path.ops.empty());
}

TEST_CASE("popped priorities are non-decreasing under the zero heuristic") {
  // The zero heuristic is consistent, so children never pop before parents.
  const auto graphs = corpus(8, 4, 6, 0, 33);
  auto zero = make_zero_heuristic();
  for (const Graph& g1 : graphs)
    for (const Graph& g2 : graphs) {
      const SolveResult r = astar_solve(g1, g2, EditCostModel::unlabeled(), *zero);
      REQUIRE(r.ok());
      CHECK(r.stats.pop_priority_monotone);
      PartialMapping m(g1.size(), g2.size());
      double g = 0.0;
      for (const EditOp& op : r.path.ops) {
        const double delta = incremental_cost(g1, g2, EditCostModel::unlabeled(), m, op);
        CHECK(delta >= 0.0);
        g += delta;
        m.apply(op);
      }
      CHECK(g == r.ged);
    }
}

TEST_CASE("budget exhaustion reports a lower bound and stats") {
  const auto graphs = corpus(2, 7, 8, 0, 35);
  auto zero = make_zero_heuristic();
  SearchLimits limits;
  limits.max_states = 50;
  const SolveResult r = astar_solve(graphs[0], graphs[1], EditCostModel::unlabeled(), *zero);
  const SolveResult capped =
      astar_solve(graphs[0], graphs[1], EditCostModel::unlabeled(), *zero, limits);
  if (capped.status == SolveStatus::BudgetExhausted) {
    CHECK(capped.lower_bound <= r.ged);
    CHECK(capped.stats.states_enqueued >= 50);
    CHECK(capped.stats.states_expanded <= capped.stats.states_enqueued);
  }
}

TEST_CASE("beam search") {
  const auto graphs = corpus(20, 2, 5, 2, 36);
  auto zero = make_zero_heuristic();
  auto hungarian = make_hungarian_heuristic();
  const EditCostModel cost = EditCostModel::uniform_label();
  std::mt19937_64 rng(37);

  SUBCASE("width 1 on identical graphs is optimal") {
    const SolveResult r = beam_solve(graphs[0], graphs[0], cost, *zero, 1);
    REQUIRE(r.ok());
    CHECK(r.ged == 0.0);
  }

  SUBCASE("infinite width reproduces A*") {
    for (int trial = 0; trial < 50; ++trial) {
      const Graph& g1 = graphs[rng() % graphs.size()];
      const Graph& g2 = graphs[rng() % graphs.size()];
      const SolveResult a = astar_solve(g1, g2, cost, *hungarian);
      const SolveResult b = beam_solve(g1, g2, cost, *hungarian, 1 << 30);
      REQUIRE(a.ok());
      REQUIRE(b.ok());
      CHECK(a.ged == b.ged);
    }
  }

  SUBCASE("any width upper-bounds the optimum and recosts exactly") {
    for (int trial = 0; trial < 100; ++trial) {
      const Graph& g1 = graphs[rng() % graphs.size()];
      const Graph& g2 = graphs[rng() % graphs.size()];
      const double opt = testing::brute_force_ged(g1, g2, cost);
      for (int width : {1, 5, 50}) {
        const SolveResult r = beam_solve(g1, g2, cost, *zero, width);
        REQUIRE(r.ok());
        CHECK(r.ged >= opt);
        CHECK(path_cost(g1, g2, cost, r.path) == r.ged);
        CHECK(is_complete_path(g1, g2, r.path));
      }
    }
  }

  SUBCASE("rejects nonpositive width") {
    CHECK_THROWS(beam_solve(graphs[0], graphs[1], cost, *zero, 0));
  }
}

TEST_CASE("hungarian tree sizes do not exceed zero-heuristic tree sizes on average") {
  const auto graphs = corpus(30, 4, 6, 2, 39);
  auto zero = make_zero_heuristic();
  auto hungarian = make_hungarian_heuristic();
  const EditCostModel cost = EditCostModel::uniform_label();
  std::mt19937_64 rng(40);

  double zero_total = 0.0, hungarian_total = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph& g1 = graphs[rng() % graphs.size()];
    const Graph& g2 = graphs[rng() % graphs.size()];
    zero_total += astar_solve(g1, g2, cost, *zero).stats.states_enqueued;
    hungarian_total += astar_solve(g1, g2, cost, *hungarian).stats.states_enqueued;
  }
  CHECK(hungarian_total < zero_total);
}
