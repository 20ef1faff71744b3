#include "gedforge/bipartite.hpp"

#include <vector>

namespace gedforge {

namespace {

// LAP over the incident edge sets of one candidate node pair, padded square
// with deletion/insertion slots.
double incident_edge_lap(std::span<const Graph::Adj> e1, std::span<const Graph::Adj> e2,
                         const EditCostModel& cost, CostMatrix& scratch) {
  const int d1 = static_cast<int>(e1.size());
  const int d2 = static_cast<int>(e2.size());
  const int n = d1 + d2;
  if (n == 0) return 0.0;
  scratch.resize(n, n);
  scratch.setConstant(kInfCost);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) scratch(i, j) = cost.edge_sub(e1[i].weight, e2[j].weight);
  for (int i = 0; i < d1; ++i) scratch(i, d2 + i) = cost.edge_del(e1[i].weight);
  for (int j = 0; j < d2; ++j) scratch(d1 + j, j) = cost.edge_ins(e2[j].weight);
  scratch.bottomRightCorner(d2, d1).setZero();
  const Assignment a = lap_hungarian(scratch);
  return a.feasible() ? a.total_cost : kInfCost;
}

BipartiteGedResult solve_with(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                              Assignment (*lap)(const Eigen::Ref<const CostMatrix>&)) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  const CostMatrix m = build_node_edge_cost_matrix(g1, g2, cost);
  const Assignment a = lap(m);

  BipartiteGedResult result;
  if (!a.feasible()) {
    result.status = SolveStatus::Infeasible;
    result.ged_upper = kInfCost;
    result.lap_cost = kInfCost;
    return result;
  }
  result.lap_cost = a.total_cost;

  // Substitutions first, then deletions, then insertions, so the op list is a
  // valid progressive edit path.
  for (int i = 0; i < n1; ++i)
    if (a.perm[i] < n2) result.path.ops.push_back(EditOp::sub(i, a.perm[i]));
  for (int i = 0; i < n1; ++i)
    if (a.perm[i] >= n2) result.path.ops.push_back(EditOp::del(i));
  for (int r = n1; r < n1 + n2; ++r)
    if (a.perm[r] < n2) result.path.ops.push_back(EditOp::ins(a.perm[r]));
  result.path.complete = true;
  result.ged_upper = path_cost(g1, g2, cost, result.path);
  return result;
}

}  // namespace

CostMatrix build_node_edge_cost_matrix(const Graph& g1, const Graph& g2,
                                       const EditCostModel& cost) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  CostMatrix m(n1 + n2, n1 + n2);
  m.setConstant(kInfCost);
  CostMatrix scratch;

  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      m(i, j) = cost.node_sub(g1.label(i), g2.label(j)) +
                incident_edge_lap(g1.neighbors(i), g2.neighbors(j), cost, scratch);

  for (int i = 0; i < n1; ++i) {
    double del = cost.node_del();
    for (const Graph::Adj& a : g1.neighbors(i)) del += cost.edge_del(a.weight);
    m(i, n2 + i) = del;
  }
  for (int j = 0; j < n2; ++j) {
    double ins = cost.node_ins();
    for (const Graph::Adj& a : g2.neighbors(j)) ins += cost.edge_ins(a.weight);
    m(n1 + j, j) = ins;
  }
  m.bottomRightCorner(n2, n1).setZero();
  return m;
}

BipartiteGedResult hungarian_ged(const Graph& g1, const Graph& g2, const EditCostModel& cost) {
  return solve_with(g1, g2, cost, &lap_hungarian);
}

BipartiteGedResult vj_ged(const Graph& g1, const Graph& g2, const EditCostModel& cost) {
  return solve_with(g1, g2, cost, &lap_jv);
}

}  // namespace gedforge
