#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "gedforge/data/synthetic.hpp"
#include "gedforge/edit_path.hpp"
#include "gedforge/error.hpp"
#include "gedforge/graph.hpp"
#include "oracle.hpp"

using namespace gedforge;

namespace {

Graph triangle() {
  return Graph("tri", {"", "", ""}, {{0, 1}, {1, 2}, {0, 2}});
}

Graph path2() { return Graph("p2", {"", ""}, {{0, 1}}); }

}  // namespace

TEST_CASE("validate_graph accepts a well-formed triangle") {
  CHECK(validate_graph(triangle()).empty());
}

TEST_CASE("validate_graph reports each violation") {
  SUBCASE("self-loop") {
    Graph g("g", {"", ""}, {{0, 0}});
    const auto errors = validate_graph(g);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("self-loop") != std::string::npos);
  }
  SUBCASE("dangling endpoint") {
    Graph g("g", {"", "", ""}, {{0, 5}});
    const auto errors = validate_graph(g);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("dangling") != std::string::npos);
  }
  SUBCASE("duplicate edge under unordered endpoints") {
    Graph g("g", {"", ""}, {{0, 1}, {1, 0}});
    const auto errors = validate_graph(g);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].find("duplicate") != std::string::npos);
  }
  SUBCASE("non-contiguous node ids") {
    Graph g("g", {0, 2}, {"", ""}, {});
    CHECK(!validate_graph(g).empty());
  }
  SUBCASE("negative weight") {
    Graph g("g", {"", ""}, {{0, 1, -2.0}});
    CHECK(!validate_graph(g).empty());
  }
}

TEST_CASE("graph JSON round trip is canonical") {
  Graph g("x1", {"C", "N", ""}, {{2, 0, 0.5}, {1, 2}});
  const std::string once = graph_to_string(g);
  const Graph parsed = graph_from_json(nlohmann::json::parse(once));
  CHECK(graph_to_string(parsed) == once);
  CHECK(parsed.label(0) == "C");
  CHECK(parsed.label(2) == "");
  CHECK(parsed.edge_weight(0, 2) == 0.5);
  CHECK(parsed.edge_weight(1, 2) == 1.0);
}

TEST_CASE("path_cost on identical graphs under the identity mapping is zero") {
  const Graph g = triangle();
  EditPath p;
  for (int i = 0; i < 3; ++i) p.ops.push_back(EditOp::sub(i, i));
  CHECK(path_cost(g, g, EditCostModel::unlabeled(), p) == 0.0);
}

TEST_CASE("matched edge pair induces a zero-cost substitution") {
  // Two matched node pairs with the edge present on both sides.
  Graph g1("a", {"C", "C"}, {{0, 1}});
  Graph g2("b", {"C", "C"}, {{0, 1}});
  EditPath p{{EditOp::sub(0, 0), EditOp::sub(1, 1)}, true};
  CHECK(path_cost(g1, g2, EditCostModel::uniform_label(), p) == 0.0);
}

TEST_CASE("deleting the second node of a path graph charges the induced edge") {
  const Graph g1 = path2();
  const Graph single("s", {""}, {});
  EditPath p{{EditOp::sub(0, 0), EditOp::del(1)}, true};
  CHECK(path_cost(g1, single, EditCostModel::unlabeled(), p) == 2.0);
}

TEST_CASE("path_cost rejects duplicate node references") {
  const Graph g = path2();
  EditPath p{{EditOp::sub(0, 0), EditOp::sub(0, 1)}, false};
  CHECK_THROWS_AS(path_cost(g, g, EditCostModel::unlabeled(), p), InvalidPathError);
}

TEST_CASE("incremental_cost matches its oracle cases") {
  const EditCostModel cost = EditCostModel::unlabeled();
  SUBCASE("isolated equal-label substitution is free") {
    Graph g1("a", {"", ""}, {});
    Graph g2("b", {"", ""}, {});
    PartialMapping m(2, 2);
    m.apply(EditOp::sub(0, 0));
    CHECK(incremental_cost(g1, g2, cost, m, EditOp::sub(1, 1)) == 0.0);
  }
  SUBCASE("deletion with three already-edited neighbors") {
    // Star: node 3 adjacent to 0,1,2, all already mapped.
    Graph g1("a", {"", "", "", ""}, {{0, 3}, {1, 3}, {2, 3}});
    Graph g2("b", {"", "", ""}, {});
    PartialMapping m(4, 3);
    m.apply(EditOp::sub(0, 0));
    m.apply(EditOp::sub(1, 1));
    m.apply(EditOp::sub(2, 2));
    CHECK(incremental_cost(g1, g2, cost, m, EditOp::del(3)) == 4.0);
  }
  SUBCASE("conflicting op throws") {
    Graph g = path2();
    PartialMapping m(2, 2);
    m.apply(EditOp::sub(0, 0));
    CHECK_THROWS_AS(incremental_cost(g, g, cost, m, EditOp::sub(1, 0)), InvalidOpError);
  }
}

TEST_CASE("incremental_cost telescopes to path_cost over random op orders") {
  std::mt19937_64 rng(11);
  const EditCostModel uniform = EditCostModel::uniform_label();
  auto cfg = data::SyntheticConfig{};
  cfg.count = 40;
  cfg.min_nodes = 2;
  cfg.max_nodes = 6;
  cfg.edge_prob = 0.5;
  cfg.label_count = 2;
  cfg.seed = 3;
  const auto graphs = data::generate_synthetic(cfg);

  for (int trial = 0; trial < 100; ++trial) {
    const Graph& g1 = graphs[rng() % graphs.size()];
    const Graph& g2 = graphs[rng() % graphs.size()];

    // Random complete path: shuffle targets, random injective assignment.
    std::vector<int> targets(g2.size());
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<EditOp> ops;
    std::size_t t = 0;
    for (int u = 0; u < g1.size(); ++u) {
      if (t < targets.size() && rng() % 4 != 0)
        ops.push_back(EditOp::sub(u, targets[t++]));
      else
        ops.push_back(EditOp::del(u));
    }
    for (; t < targets.size(); ++t) ops.push_back(EditOp::ins(targets[t]));
    std::shuffle(ops.begin(), ops.end(), rng);

    PartialMapping m(g1.size(), g2.size());
    double total = 0.0;
    for (const EditOp& op : ops) {
      total += incremental_cost(g1, g2, uniform, m, op);
      m.apply(op);
    }
    // Integer unit costs: sums are exact in doubles regardless of op order.
    CHECK(total == path_cost(g1, g2, uniform, EditPath{ops, true}));
  }
}

TEST_CASE("complete path cost upper-bounds the brute force GED") {
  auto cfg = data::SyntheticConfig{};
  cfg.count = 16;
  cfg.min_nodes = 2;
  cfg.max_nodes = 5;
  cfg.edge_prob = 0.5;
  cfg.label_count = 2;
  cfg.seed = 5;
  const auto graphs = data::generate_synthetic(cfg);
  const EditCostModel cost = EditCostModel::uniform_label();
  std::mt19937_64 rng(7);

  for (int trial = 0; trial < 40; ++trial) {
    const Graph& g1 = graphs[rng() % graphs.size()];
    const Graph& g2 = graphs[rng() % graphs.size()];
    const double opt = testing::brute_force_ged(g1, g2, cost);

    std::vector<EditOp> ops;
    std::vector<int> targets(g2.size());
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    std::size_t t = 0;
    for (int u = 0; u < g1.size(); ++u) {
      if (t < targets.size())
        ops.push_back(EditOp::sub(u, targets[t++]));
      else
        ops.push_back(EditOp::del(u));
    }
    for (; t < targets.size(); ++t) ops.push_back(EditOp::ins(targets[t]));
    CHECK(path_cost(g1, g2, cost, EditPath{ops, true}) >= opt);
  }
}

TEST_CASE("unmatched_subgraphs") {
  const Graph g = triangle();
  SUBCASE("empty state returns both graphs unchanged") {
    PartialMapping m(3, 3);
    const auto sub = unmatched_subgraphs(g, g, m);
    CHECK(sub.g1_sub.size() == 3);
    CHECK(sub.g1_sub.edges().size() == 3);
    CHECK(sub.g1_new_to_old == std::vector<int>{0, 1, 2});
  }
  SUBCASE("all nodes edited leaves two empty graphs") {
    PartialMapping m(3, 3);
    for (int i = 0; i < 3; ++i) m.apply(EditOp::sub(i, i));
    const auto sub = unmatched_subgraphs(g, g, m);
    CHECK(sub.g1_sub.size() == 0);
    CHECK(sub.g2_sub.size() == 0);
  }
  SUBCASE("one edited triangle node leaves a single surviving edge") {
    PartialMapping m(3, 3);
    m.apply(EditOp::sub(0, 0));
    const auto sub = unmatched_subgraphs(g, g, m);
    CHECK(sub.g1_sub.size() == 2);
    REQUIRE(sub.g1_sub.edges().size() == 1);
    CHECK(sub.g1_old_to_new[0] == -1);
    CHECK(sub.g1_new_to_old == std::vector<int>{1, 2});
  }
}
