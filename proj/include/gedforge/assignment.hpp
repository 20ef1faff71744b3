#pragma once

#include <vector>

#include <Eigen/Dense>

namespace gedforge {

/// Square LAP cost matrix; entries are finite nonnegative reals or +inf for
/// forbidden assignments.
using CostMatrix = Eigen::MatrixXd;

enum class LapStatus { Optimal, Infeasible };

struct Assignment {
  LapStatus status = LapStatus::Optimal;
  std::vector<int> perm;  // perm[i] = column assigned to row i
  double total_cost = 0.0;

  bool feasible() const { return status == LapStatus::Optimal; }
};

/// Kuhn-Munkres with dual potentials, O(n^3). +inf entries are treated as
/// forbidden and never enter an augmenting path; if a perfect matching over
/// finite entries does not exist the instance is reported infeasible.
/// Ties during augmentation resolve to the lowest column index.
Assignment lap_hungarian(const Eigen::Ref<const CostMatrix>& m);

/// Jonker-Volgenant: column reduction and reduction transfer followed by
/// shortest augmenting paths. Same contract and tie policy as lap_hungarian.
Assignment lap_jv(const Eigen::Ref<const CostMatrix>& m);

}  // namespace gedforge
