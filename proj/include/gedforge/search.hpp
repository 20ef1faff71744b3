#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "gedforge/edit_path.hpp"

namespace gedforge {

struct SearchLimits {
  std::uint64_t max_states = 10'000'000;  // states ever enqueued
  double max_seconds = 0.0;               // 0 = unlimited
};

struct SearchStats {
  std::uint64_t states_enqueued = 0;  // every insertion into OPEN
  std::uint64_t states_expanded = 0;
  double wall_time = 0.0;
  bool optimal_found = false;  // true only under a certified admissible heuristic
  bool pop_priority_monotone = true;  // g+h never decreased across pops
};

enum class SolveStatus { Ok, BudgetExhausted, Infeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::Ok;
  EditPath path;
  double ged = 0.0;          // path_cost of `path` when status == Ok
  double lower_bound = 0.0;  // best g+h still open when the budget ran out
  SearchStats stats;

  bool ok() const { return status == SolveStatus::Ok; }
};

/// What a heuristic sees at one search state. Sources are edited strictly in
/// index order, so nodes 0..edited_sources-1 of g1 are edited and src_map[u]
/// holds the assigned target (or -1 for deletion). `used_targets` is a bitmask
/// over g2 nodes covered by the mapping or by insertions.
struct StateView {
  const Graph* g1;
  const Graph* g2;
  const EditCostModel* cost;
  int edited_sources;
  std::span<const int> src_map;
  std::uint64_t used_targets;

  int unmatched_sources() const { return g1->size() - edited_sources; }
  int unmatched_targets() const;
};

class HeuristicSession {
 public:
  virtual ~HeuristicSession() = default;
  virtual double h(const StateView& state) = 0;
};

class HeuristicProvider {
 public:
  virtual ~HeuristicProvider() = default;
  virtual const char* name() const = 0;
  virtual bool admissible() const = 0;
  /// Builds per-solve scratch state (caches, matrices). Sessions are not
  /// shared between concurrent solves.
  virtual std::unique_ptr<HeuristicSession> prepare(const Graph& g1, const Graph& g2,
                                                    const EditCostModel& cost) = 0;
};

/// Best-first search over partial edit paths: pops the minimum g+h state,
/// expands it by editing the next source node every possible way, and finishes
/// incomplete mappings with a bulk insertion of the remaining target nodes.
/// With an admissible heuristic the returned cost is the exact GED.
SolveResult astar_solve(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                        HeuristicProvider& heuristic, const SearchLimits& limits = {});

/// Same engine with OPEN truncated to the `beam_width` best states after every
/// expansion; the result is an upper bound on GED.
SolveResult beam_solve(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                       HeuristicProvider& heuristic, int beam_width,
                       const SearchLimits& limits = {});

}  // namespace gedforge
