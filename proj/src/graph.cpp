#include "gedforge/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "gedforge/error.hpp"

namespace gedforge {

Graph::Graph(std::string id, std::vector<std::string> labels, std::vector<Edge> edges)
    : id_(std::move(id)), labels_(std::move(labels)), edges_(std::move(edges)) {
  node_ids_.resize(labels_.size());
  for (int i = 0; i < size(); ++i) node_ids_[i] = i;
  build_adjacency();
}

Graph::Graph(std::string id, std::vector<int> node_ids, std::vector<std::string> labels,
             std::vector<Edge> edges)
    : id_(std::move(id)),
      node_ids_(std::move(node_ids)),
      labels_(std::move(labels)),
      edges_(std::move(edges)) {
  build_adjacency();
}

void Graph::build_adjacency() {
  adj_.assign(labels_.size(), {});
  const int n = size();
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v) continue;
    adj_[e.u].push_back({e.v, e.weight});
    adj_[e.v].push_back({e.u, e.weight});
  }
  for (auto& nb : adj_)
    std::sort(nb.begin(), nb.end(), [](const Adj& a, const Adj& b) { return a.to < b.to; });
}

double Graph::edge_weight(int u, int v) const {
  for (const Adj& a : adj_[u])
    if (a.to == v) return a.weight;
  return -1.0;
}

Graph Graph::with_normalized_weights(double normalizer) const {
  std::vector<Edge> scaled = edges_;
  for (Edge& e : scaled) e.weight /= normalizer;
  return Graph(id_, node_ids_, labels_, std::move(scaled));
}

std::vector<std::string> validate_graph(const Graph& g) {
  std::vector<std::string> errors;
  const int n = g.size();

  const auto& ids = g.node_ids();
  for (int i = 0; i < n; ++i) {
    if (ids[i] != i) {
      errors.push_back("non-contiguous indices: node slot " + std::to_string(i) +
                       " has id " + std::to_string(ids[i]));
    }
  }

  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      errors.push_back("self-loop at node " + std::to_string(e.u));
      continue;
    }
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      errors.push_back("dangling endpoint on edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
      continue;
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      errors.push_back("duplicate edge (" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + ")");
    }
    if (e.weight < 0.0) {
      errors.push_back("negative weight on edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
  }
  return errors;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw IoError("graph JSON must be an object");
  std::string id = j.value("id", "");
  std::vector<int> node_ids;
  std::vector<std::string> labels;
  if (j.contains("nodes")) {
    for (const auto& nj : j.at("nodes")) {
      node_ids.push_back(nj.at("id").get<int>());
      const auto& lj = nj.contains("label") ? nj.at("label") : nlohmann::json();
      labels.push_back(lj.is_string() ? lj.get<std::string>() : std::string());
    }
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& ej : j.at("edges")) {
      Edge e;
      e.u = ej.at("u").get<int>();
      e.v = ej.at("v").get<int>();
      e.weight = ej.value("weight", 1.0);
      edges.push_back(e);
    }
  }
  return Graph(std::move(id), std::move(node_ids), std::move(labels), std::move(edges));
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["id"] = g.id();
  auto nodes = nlohmann::ordered_json::array();
  for (int i = 0; i < g.size(); ++i) {
    nlohmann::ordered_json nj;
    nj["id"] = g.node_ids()[i];
    if (g.label(i).empty())
      nj["label"] = nullptr;
    else
      nj["label"] = g.label(i);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);

  std::vector<Edge> sorted = g.edges();
  for (Edge& e : sorted)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : sorted) {
    nlohmann::ordered_json ej;
    ej["u"] = e.u;
    ej["v"] = e.v;
    if (e.weight != 1.0) ej["weight"] = e.weight;
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string graph_to_string(const Graph& g) { return graph_to_json(g).dump(); }

std::vector<Graph> load_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  std::vector<Graph> out;
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (!j.is_discarded()) {
    if (j.is_array()) {
      for (const auto& gj : j) out.push_back(graph_from_json(gj));
    } else {
      out.push_back(graph_from_json(j));
    }
    return out;
  }
  // One graph per line.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json lj = nlohmann::json::parse(line, nullptr, false);
    if (lj.is_discarded()) throw IoError("malformed graph JSON in " + path);
    out.push_back(graph_from_json(lj));
  }
  if (out.empty()) throw IoError("no graphs found in " + path);
  return out;
}

Graph load_graph(const std::string& path) {
  auto graphs = load_graphs(path);
  if (graphs.size() != 1) throw IoError(path + ": expected exactly one graph");
  return std::move(graphs.front());
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << graph_to_string(g) << "\n";
}

}  // namespace gedforge
