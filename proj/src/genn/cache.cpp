#include "gedforge/genn/cache.hpp"

#include <algorithm>

#include "gedforge/error.hpp"

namespace gedforge::genn {

namespace {

Eigen::MatrixXd gather_unmasked(const Eigen::MatrixXd& x, std::uint64_t masked) {
  const int n = static_cast<int>(x.rows());
  Eigen::MatrixXd out(n - std::popcount(masked), x.cols());
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (!(masked & (1ull << i))) out.row(r++) = x.row(i);
  return out;
}

std::uint64_t mask_bits(std::span<const int> masked) {
  std::uint64_t bits = 0;
  for (int i : masked) bits |= 1ull << i;
  return bits;
}

}  // namespace

EmbeddingCache build_cache(const GennModel& m, const Graph& g) {
  EmbeddingCache cache;
  cache.graph_id = g.id();
  cache.final_embeddings = gcn_forward(m, g, init_features(g, m.features));
  cache.strategy = EmbedStrategy::RowCache;
  return cache;
}

double masked_similarity(const GennModel& m, const EmbeddingCache& c1, const EmbeddingCache& c2,
                         std::uint64_t masked1, std::uint64_t masked2) {
  const Eigen::MatrixXd rows1 = gather_unmasked(c1.final_embeddings, masked1);
  const Eigen::MatrixXd rows2 = gather_unmasked(c2.final_embeddings, masked2);
  if (rows1.rows() == 0 || rows2.rows() == 0)
    throw EmptyGraphError("masked similarity with a fully masked side");
  return ntn_score(m, attention_pool(m, rows1), attention_pool(m, rows2));
}

double masked_similarity(const GennModel& m, const EmbeddingCache& c1, const EmbeddingCache& c2,
                         std::span<const int> masked1, std::span<const int> masked2) {
  return masked_similarity(m, c1, c2, mask_bits(masked1), mask_bits(masked2));
}

LayerCache build_layer_cache(const GennModel& m, const Graph& g) {
  LayerCache cache;
  cache.nodes.resize(g.size());
  for (int i = 0; i < g.size(); ++i) cache.nodes[i] = i;
  cache.x0 = init_features(g, m.features);
  const Eigen::MatrixXd a = normalized_adjacency(g);
  cache.x1 = ((a * cache.x0) * m.conv_w[0]).cwiseMax(0.0);
  cache.x2 = ((a * cache.x1) * m.conv_w[1]).cwiseMax(0.0);
  cache.x3 = (a * cache.x2) * m.conv_w[2];
  return cache;
}

LayerCache exact_dynamic_update(const GennModel& m, const Graph& g, const LayerCache& cache,
                                int deleted_node) {
  const int n_old = static_cast<int>(cache.nodes.size());
  const auto it = std::lower_bound(cache.nodes.begin(), cache.nodes.end(), deleted_node);
  if (it == cache.nodes.end() || *it != deleted_node)
    throw InvalidOpError("deleted node not present in the layer cache");
  const int drop = static_cast<int>(it - cache.nodes.begin());
  const int n = n_old - 1;

  LayerCache out;
  out.nodes.reserve(n);
  for (int i = 0; i < n_old; ++i)
    if (i != drop) out.nodes.push_back(cache.nodes[i]);

  std::vector<int> pos(g.size(), -1);  // original index -> row in `out`
  for (int i = 0; i < n; ++i) pos[out.nodes[i]] = i;

  auto drop_row = [&](const Eigen::MatrixXd& x) {
    Eigen::MatrixXd y(n, x.cols());
    y.topRows(drop) = x.topRows(drop);
    y.bottomRows(n - drop) = x.bottomRows(n - drop);
    return y;
  };
  out.x0 = drop_row(cache.x0);
  out.x1 = drop_row(cache.x1);
  out.x2 = drop_row(cache.x2);
  out.x3 = drop_row(cache.x3);

  // Normalization degrees on the modified graph.
  Eigen::VectorXd deg = Eigen::VectorXd::Ones(n);
  for (int i = 0; i < n; ++i)
    for (const Graph::Adj& a : g.neighbors(out.nodes[i]))
      if (pos[a.to] >= 0) deg(i) += a.weight;

  // Affected rows: the symmetric normalization couples two hops per layer, so
  // layer l must refresh the (l+1)-hop ball around the deleted node.
  std::vector<char> ball(n, 0);
  std::vector<int> frontier;
  for (const Graph::Adj& a : g.neighbors(deleted_node))
    if (pos[a.to] >= 0 && !ball[pos[a.to]]) {
      ball[pos[a.to]] = 1;
      frontier.push_back(pos[a.to]);
    }
  auto grow = [&]() {
    std::vector<int> next;
    for (int i : frontier)
      for (const Graph::Adj& a : g.neighbors(out.nodes[i]))
        if (pos[a.to] >= 0 && !ball[pos[a.to]]) {
          ball[pos[a.to]] = 1;
          next.push_back(pos[a.to]);
        }
    frontier.insert(frontier.end(), next.begin(), next.end());
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (ball[i]) rows.push_back(i);
    return rows;
  };

  const std::vector<int> rows1 = grow();  // 2-hop ball
  auto refresh = [&](const Eigen::MatrixXd& prev, Eigen::MatrixXd& next,
                     const Eigen::MatrixXd& w, const std::vector<int>& rows, bool relu) {
    for (int i : rows) {
      Eigen::RowVectorXd agg = prev.row(i) / deg(i);
      for (const Graph::Adj& a : g.neighbors(out.nodes[i])) {
        const int j = pos[a.to];
        if (j >= 0) agg += (a.weight / std::sqrt(deg(i) * deg(j))) * prev.row(j);
      }
      next.row(i) = relu ? (agg * w).cwiseMax(0.0).eval() : (agg * w).eval();
    }
  };

  refresh(out.x0, out.x1, m.conv_w[0], rows1, true);
  const std::vector<int> rows2 = grow();  // 3-hop
  refresh(out.x1, out.x2, m.conv_w[1], rows2, true);
  const std::vector<int> rows3 = grow();  // 4-hop
  refresh(out.x2, out.x3, m.conv_w[2], rows3, false);
  return out;
}

}  // namespace gedforge::genn
