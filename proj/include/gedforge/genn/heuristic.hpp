#pragma once

#include <memory>

#include "gedforge/genn/model.hpp"
#include "gedforge/search.hpp"

namespace gedforge::genn {

inline constexpr double kSimilarityClampLo = 1e-7;
inline constexpr double kSimilarityClampHi = 1.0 - 1e-7;

/// Learned heuristic: h(p) derived from the row-cache similarity of the
/// unmatched subgraphs, with the similarity clamped before the logarithm.
/// When either unmatched side is empty the completion is forced, so the exact
/// remaining deletion/insertion cost is returned without a network call.
/// Not admissible: predictions may exceed the true remaining cost.
std::unique_ptr<HeuristicProvider> make_genn_heuristic(GennModel model);

}  // namespace gedforge::genn
