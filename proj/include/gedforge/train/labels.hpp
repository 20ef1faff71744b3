#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gedforge/edit_path.hpp"

namespace gedforge::train {

/// One finetuning sample: a sub-path of an optimal edit path with the exact
/// remaining-cost similarity target implied by the optimality of the full path.
struct PartialPathLabel {
  std::string pair_id;
  std::vector<EditOp> ops;
  std::uint64_t masked_sources = 0;  // bitmask over g1 nodes edited by `ops`
  std::uint64_t masked_targets = 0;  // bitmask over g2 nodes used by `ops`
  double g_cost = 0.0;               // exact cost of the sub-path
  double h_opt = 0.0;                // ged* - g_cost
  double s_opt = 1.0;                // exp(-2 h_opt / (n1' + n2')); 1 when complete
};

/// Maximum edition count for which all 2^m - 1 nonempty sub-paths are
/// enumerated; above it only the m prefixes are emitted.
inline constexpr int kSubsetLimit = 12;

/// Expands one optimal edit path into partial-path labels: every prefix, plus
/// all nonempty op subsets when the path has at most kSubsetLimit editions.
/// Throws InvalidPathError when path_cost(optimal) != ged.
std::vector<PartialPathLabel> generate_partial_labels(const Graph& g1, const Graph& g2,
                                                      const EditCostModel& cost,
                                                      const EditPath& optimal, double ged);

}  // namespace gedforge::train
