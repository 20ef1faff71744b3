#include "gedforge/data/synthetic.hpp"

#include <numeric>
#include <random>

#include "gedforge/error.hpp"

namespace gedforge::data {

namespace {

bool connected(int n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

std::vector<Graph> generate_synthetic(const SyntheticConfig& config) {
  if (config.edge_prob < 0.0 || config.edge_prob > 1.0)
    throw ConfigError("edge_prob must lie in [0, 1]");
  if (config.min_nodes < 1 || config.min_nodes > config.max_nodes)
    throw ConfigError("need 1 <= min_nodes <= max_nodes");

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> size_dist(config.min_nodes, config.max_nodes);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Graph> graphs;
  graphs.reserve(config.count);
  for (int g = 0; g < config.count; ++g) {
    const int n = size_dist(rng);
    std::vector<Edge> edges;
    for (int attempt = 0;; ++attempt) {
      edges.clear();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (unit(rng) < config.edge_prob) edges.push_back({u, v, 1.0});
      if (connected(n, edges)) break;
      if (attempt >= 1000) {
        // Sparse settings may practically never connect; close the gap with a
        // random spanning path over the sampled edges.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i + 1 < n; ++i) {
          const auto [a, b] = std::minmax(perm[i], perm[i + 1]);
          bool present = false;
          for (const Edge& e : edges)
            present |= (std::min(e.u, e.v) == a && std::max(e.u, e.v) == b);
          if (!present) edges.push_back({a, b, 1.0});
        }
        break;
      }
    }
    if (config.geometric_weights) {
      for (Edge& e : edges)
        e.weight = std::uniform_real_distribution<double>(1e-3, config.raw_weight_max)(rng);
    }
    std::vector<std::string> labels(n);
    if (config.label_count > 0) {
      std::uniform_int_distribution<int> label_dist(0, config.label_count - 1);
      for (auto& l : labels) l = "L" + std::to_string(label_dist(rng));
    }
    std::string id = config.id_prefix + std::to_string(g);
    graphs.emplace_back(std::move(id), std::move(labels), std::move(edges));
  }
  return graphs;
}

}  // namespace gedforge::data
