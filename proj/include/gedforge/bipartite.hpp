#pragma once

#include "gedforge/assignment.hpp"
#include "gedforge/edit_path.hpp"
#include "gedforge/search.hpp"

namespace gedforge {

struct BipartiteGedResult {
  SolveStatus status = SolveStatus::Ok;
  EditPath path;
  double ged_upper = 0.0;  // path_cost of path; an upper bound on GED
  double lap_cost = 0.0;   // the LAP objective, which double-counts edge terms

  bool ok() const { return status == SolveStatus::Ok; }
};

/// (n1+n2)^2 matrix encoding edge edition costs into node costs: a
/// substitution entry adds the optimal assignment between the two incident
/// edge sets, a deletion/insertion entry adds the cost of dropping or adding
/// every incident edge.
CostMatrix build_node_edge_cost_matrix(const Graph& g1, const Graph& g2,
                                       const EditCostModel& cost);

/// One LAP solve on the encoded matrix, read off as a complete edit path.
/// The reported GED is the induced cost of that path, recomputed exactly.
BipartiteGedResult hungarian_ged(const Graph& g1, const Graph& g2, const EditCostModel& cost);
BipartiteGedResult vj_ged(const Graph& g1, const Graph& g2, const EditCostModel& cost);

}  // namespace gedforge
