#include "gedforge/genn/features.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace gedforge::genn {

int FeatureConfig::label_index(const std::string& label) const {
  const auto it = std::lower_bound(label_vocab.begin(), label_vocab.end(), label);
  if (it != label_vocab.end() && *it == label)
    return static_cast<int>(it - label_vocab.begin());
  return static_cast<int>(label_vocab.size());  // unknown slot
}

FeatureConfig FeatureConfig::from_graphs(std::span<const Graph> graphs, int max_degree) {
  std::set<std::string> labels;
  for (const Graph& g : graphs)
    for (const std::string& l : g.labels())
      if (!l.empty()) labels.insert(l);
  FeatureConfig config;
  config.max_degree = max_degree;
  config.label_vocab.assign(labels.begin(), labels.end());
  return config;
}

nlohmann::json FeatureConfig::to_json() const {
  return nlohmann::json{{"max_degree", max_degree}, {"label_vocab", label_vocab}};
}

FeatureConfig FeatureConfig::from_json(const nlohmann::json& j) {
  FeatureConfig config;
  config.max_degree = j.at("max_degree").get<int>();
  config.label_vocab = j.at("label_vocab").get<std::vector<std::string>>();
  return config;
}

Eigen::MatrixXd init_features(const Graph& g, const FeatureConfig& config) {
  const int n = g.size();
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, config.feature_dim());
  for (int i = 0; i < n; ++i) {
    x(i, std::min(g.degree(i), config.max_degree)) = 1.0;
    if (config.labeled())
      x(i, config.max_degree + 1 + config.label_index(g.label(i))) = 1.0;
  }
  return x;
}

}  // namespace gedforge::genn
