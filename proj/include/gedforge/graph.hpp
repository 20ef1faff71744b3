#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gedforge {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Undirected labeled graph with optional scalar edge weights. Nodes are
/// addressed by contiguous 0-based indices; an empty label string means the
/// node is unlabeled.
class Graph {
 public:
  struct Adj {
    int to;
    double weight;
  };

  Graph() = default;
  Graph(std::string id, std::vector<std::string> labels, std::vector<Edge> edges);

  /// Raw constructor used by the JSON loader; node ids are kept as parsed so
  /// validate_graph can report non-contiguous indices.
  Graph(std::string id, std::vector<int> node_ids, std::vector<std::string> labels,
        std::vector<Edge> edges);

  const std::string& id() const { return id_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& node_ids() const { return node_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Adj> neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }

  /// Weight of edge (u,v); negative if the edge is absent.
  double edge_weight(int u, int v) const;

  /// Copy with edge weights divided by `normalizer`.
  Graph with_normalized_weights(double normalizer) const;

 private:
  void build_adjacency();

  std::string id_;
  std::vector<int> node_ids_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Adj>> adj_;
};

/// Returns one message per invariant violation; empty means the graph is valid.
/// Detects self-loops, duplicate undirected edges, dangling endpoints and
/// non-contiguous node indices.
std::vector<std::string> validate_graph(const Graph& g);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Canonical serialization: nodes by index, edges normalized u<v and sorted.
/// Parsing the output and serializing again reproduces the bytes exactly.
std::string graph_to_string(const Graph& g);

/// Accepts a single JSON object, a JSON array of graphs, or one graph per line.
std::vector<Graph> load_graphs(const std::string& path);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace gedforge
