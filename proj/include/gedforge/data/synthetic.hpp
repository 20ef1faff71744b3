#pragma once

#include <cstdint>
#include <vector>

#include "gedforge/graph.hpp"

namespace gedforge::data {

struct SyntheticConfig {
  int count = 10;
  int min_nodes = 3;
  int max_nodes = 8;
  double edge_prob = 0.5;
  int label_count = 0;             // categorical vocabulary size; 0 = unlabeled
  bool geometric_weights = false;  // raw weights uniform in (0, raw_weight_max]
  double raw_weight_max = 300.0;
  std::uint64_t seed = 0;
  std::string id_prefix = "g";
};

/// Erdos-Renyi style connected graphs (resampled until connected), uniform
/// random labels from an "L0".."Lk" vocabulary. Deterministic under seed.
std::vector<Graph> generate_synthetic(const SyntheticConfig& config);

}  // namespace gedforge::data
