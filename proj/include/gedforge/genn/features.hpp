#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "gedforge/graph.hpp"

namespace gedforge::genn {

/// Input feature layout: one-hot of the clipped node degree, concatenated with
/// a one-hot of the node label when a vocabulary is present (plus one
/// out-of-vocabulary slot).
struct FeatureConfig {
  int max_degree = 10;
  std::vector<std::string> label_vocab;  // sorted unique; empty = unlabeled graphs

  bool labeled() const { return !label_vocab.empty(); }
  int feature_dim() const {
    return max_degree + 1 + (labeled() ? static_cast<int>(label_vocab.size()) + 1 : 0);
  }
  int label_index(const std::string& label) const;

  static FeatureConfig from_graphs(std::span<const Graph> graphs, int max_degree = 10);

  nlohmann::json to_json() const;
  static FeatureConfig from_json(const nlohmann::json& j);

  bool operator==(const FeatureConfig&) const = default;
};

Eigen::MatrixXd init_features(const Graph& g, const FeatureConfig& config);

}  // namespace gedforge::genn
