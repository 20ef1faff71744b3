#include <doctest.h>

#include <random>

#include "gedforge/data/synthetic.hpp"
#include "gedforge/heuristics.hpp"
#include "oracle.hpp"

using namespace gedforge;

TEST_CASE("hungarian bound basics") {
  const EditCostModel cost = EditCostModel::uniform_label();

  SUBCASE("both subgraphs empty give zero") {
    Graph g1("a", {"C"}, {});
    Graph g2("b", {"C"}, {});
    PartialMapping m(1, 1);
    m.apply(EditOp::sub(0, 0));
    CHECK(hungarian_lower_bound(g1, g2, cost, m) == 0.0);
  }

  SUBCASE("single mismatched labels prefer substitution over delete+insert") {
    Graph g1("a", {"C"}, {});
    Graph g2("b", {"N"}, {});
    PartialMapping m(1, 1);
    CHECK(hungarian_lower_bound(g1, g2, cost, m) == 1.0);
  }
}

TEST_CASE("hungarian bound never exceeds the remaining optimal cost") {
  data::SyntheticConfig cfg;
  cfg.count = 20;
  cfg.min_nodes = 3;
  cfg.max_nodes = 5;
  cfg.edge_prob = 0.5;
  cfg.label_count = 2;
  cfg.seed = 51;
  const auto graphs = data::generate_synthetic(cfg);
  const EditCostModel cost = EditCostModel::uniform_label();
  std::mt19937_64 rng(52);

  for (int trial = 0; trial < 50; ++trial) {
    const Graph& g1 = graphs[rng() % graphs.size()];
    const Graph& g2 = graphs[rng() % graphs.size()];

    // Random partial states in A* prefix order.
    const int k = static_cast<int>(rng() % (g1.size() + 1));
    std::vector<EditOp> ops;
    std::vector<char> used(g2.size(), 0);
    PartialMapping m(g1.size(), g2.size());
    bool valid = true;
    for (int u = 0; u < k && valid; ++u) {
      if (rng() % 3 == 0) {
        ops.push_back(EditOp::del(u));
      } else {
        int v = static_cast<int>(rng() % g2.size());
        int tries = 0;
        while (used[v] && tries++ < g2.size()) v = (v + 1) % g2.size();
        if (used[v]) {
          valid = false;
          break;
        }
        used[v] = 1;
        ops.push_back(EditOp::sub(u, v));
      }
    }
    if (!valid) continue;
    for (const EditOp& op : ops) m.apply(op);

    const double bound = hungarian_lower_bound(g1, g2, cost, m);
    const double h_true = testing::brute_force_remaining_cost(g1, g2, cost, ops);
    CHECK(bound <= h_true + 1e-9);

    // Also against GED of the bare unmatched subgraphs, which the bound is
    // constructed from.
    const auto sub = unmatched_subgraphs(g1, g2, m);
    const double sub_ged = testing::brute_force_ged(sub.g1_sub, sub.g2_sub, cost);
    CHECK(bound <= sub_ged + 1e-9);
    CHECK(sub_ged <= h_true + 1e-9);
  }
}
