#pragma once

// Test-only oracles, all brute force and independent of the search code paths
// they're used to check.

#include <algorithm>
#include <limits>
#include <vector>

#include "gedforge/edit_path.hpp"

namespace gedforge::testing {

// Enumerates every complete edit path (epsilon-padded injective node mapping)
// and returns the minimum induced cost.
inline double brute_force_ged_rec(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                                  int u, std::vector<EditOp>& ops, std::vector<char>& used) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  if (u == n1) {
    for (int v = 0; v < n2; ++v)
      if (!used[v]) ops.push_back(EditOp::ins(v));
    EditPath p{ops, true};
    const double total = path_cost(g1, g2, cost, p);
    ops.resize(ops.size() - (n2 - std::count(used.begin(), used.end(), 1)));
    return total;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int v = 0; v < n2; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    ops.push_back(EditOp::sub(u, v));
    best = std::min(best, brute_force_ged_rec(g1, g2, cost, u + 1, ops, used));
    ops.pop_back();
    used[v] = 0;
  }
  ops.push_back(EditOp::del(u));
  best = std::min(best, brute_force_ged_rec(g1, g2, cost, u + 1, ops, used));
  ops.pop_back();
  return best;
}

inline double brute_force_ged(const Graph& g1, const Graph& g2, const EditCostModel& cost) {
  std::vector<EditOp> ops;
  std::vector<char> used(g2.size(), 0);
  return brute_force_ged_rec(g1, g2, cost, 0, ops, used);
}

// Minimum cost of completing the partial path `base`: enumerates every way of
// editing the remaining nodes and returns min total - g(base). This is the
// true remaining cost h_opt(p), boundary edge editions included.
inline double brute_force_completion_rec(const Graph& g1, const Graph& g2,
                                         const EditCostModel& cost, int u,
                                         std::vector<EditOp>& ops, std::vector<char>& used,
                                         const std::vector<char>& src_done) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  while (u < n1 && src_done[u]) ++u;
  if (u == n1) {
    std::size_t added = 0;
    for (int v = 0; v < n2; ++v)
      if (!used[v]) {
        ops.push_back(EditOp::ins(v));
        ++added;
      }
    EditPath p{ops, true};
    const double total = path_cost(g1, g2, cost, p);
    ops.resize(ops.size() - added);
    return total;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int v = 0; v < n2; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    ops.push_back(EditOp::sub(u, v));
    best = std::min(best, brute_force_completion_rec(g1, g2, cost, u + 1, ops, used, src_done));
    ops.pop_back();
    used[v] = 0;
  }
  ops.push_back(EditOp::del(u));
  best = std::min(best, brute_force_completion_rec(g1, g2, cost, u + 1, ops, used, src_done));
  ops.pop_back();
  return best;
}

inline double brute_force_remaining_cost(const Graph& g1, const Graph& g2,
                                         const EditCostModel& cost,
                                         const std::vector<EditOp>& base) {
  std::vector<EditOp> ops = base;
  std::vector<char> used(g2.size(), 0);
  std::vector<char> src_done(g1.size(), 0);
  for (const EditOp& op : base) {
    if (op.u >= 0) src_done[op.u] = 1;
    if (op.v >= 0) used[op.v] = 1;
  }
  const double base_cost = path_cost(g1, g2, cost, PartialMapping::from_ops(g1, g2, base));
  const double total = brute_force_completion_rec(g1, g2, cost, 0, ops, used, src_done);
  return total - base_cost;
}

}  // namespace gedforge::testing
