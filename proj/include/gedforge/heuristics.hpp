#pragma once

#include <memory>

#include "gedforge/search.hpp"

namespace gedforge {

/// h(p) = 0 for every state. Admissible; no lookahead.
std::unique_ptr<HeuristicProvider> make_zero_heuristic();

/// Decomposed bipartite lower bound: one LAP over the unmatched node sets plus
/// one LAP over the unmatched edge sets. Every node and edge edit of any
/// completion is counted at most once and at no more than its true cost, so
/// the bound is admissible.
std::unique_ptr<HeuristicProvider> make_hungarian_heuristic();

/// Same bound computed for an arbitrary consistent partial mapping.
double hungarian_lower_bound(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                             const PartialMapping& m);

}  // namespace gedforge
