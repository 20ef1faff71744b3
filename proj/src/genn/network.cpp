#include "gedforge/genn/network.hpp"

#include <cmath>

#include "gedforge/error.hpp"
#include "gedforge/genn/cache.hpp"

namespace gedforge::genn {

const char* to_string(EmbedStrategy s) {
  switch (s) {
    case EmbedStrategy::Vanilla: return "vanilla";
    case EmbedStrategy::ExactDynamic: return "exact_dynamic";
    case EmbedStrategy::RowCache: return "row_cache";
  }
  return "?";
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
  const int n = g.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  const Eigen::VectorXd dinv = a.rowwise().sum().cwiseSqrt().cwiseInverse();
  return dinv.asDiagonal() * a * dinv.asDiagonal();
}

Eigen::MatrixXd normalized_adjacency(const Graph& g, std::span<const int> nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> old_to_new(g.size(), -1);
  for (int i = 0; i < n; ++i) old_to_new[nodes[i]] = i;
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (const Graph::Adj& adj : g.neighbors(nodes[i])) {
      const int j = old_to_new[adj.to];
      if (j >= 0) a(i, j) = adj.weight;
    }
  const Eigen::VectorXd dinv = a.rowwise().sum().cwiseSqrt().cwiseInverse();
  return dinv.asDiagonal() * a * dinv.asDiagonal();
}

namespace {

Eigen::MatrixXd conv_layers(const GennModel& m, const Eigen::MatrixXd& a,
                            const Eigen::MatrixXd& x0) {
  Eigen::MatrixXd x1 = ((a * x0) * m.conv_w[0]).cwiseMax(0.0);
  Eigen::MatrixXd x2 = ((a * x1) * m.conv_w[1]).cwiseMax(0.0);
  return (a * x2) * m.conv_w[2];
}

}  // namespace

Eigen::MatrixXd gcn_forward(const GennModel& m, const Graph& g, const Eigen::MatrixXd& x0) {
  return conv_layers(m, normalized_adjacency(g), x0);
}

Eigen::MatrixXd gcn_forward_masked(const GennModel& m, const Graph& g,
                                   const Eigen::MatrixXd& x0_full, std::span<const int> nodes) {
  const int n = static_cast<int>(nodes.size());
  Eigen::MatrixXd x0(n, x0_full.cols());
  for (int i = 0; i < n; ++i) x0.row(i) = x0_full.row(nodes[i]);
  return conv_layers(m, normalized_adjacency(g, nodes), x0);
}

Eigen::RowVectorXd attention_pool(const GennModel& m,
                                  const Eigen::Ref<const Eigen::MatrixXd>& x) {
  if (x.rows() == 0) throw EmptyGraphError("attention pooling over zero nodes");
  const Eigen::RowVectorXd xbar = x.colwise().mean();
  const Eigen::RowVectorXd key = (xbar * m.attention_w).array().tanh();
  const Eigen::VectorXd logits = kAttentionScale * (x * key.transpose());
  const Eigen::VectorXd coeff = logits.unaryExpr([](double t) { return 1.0 / (1.0 + std::exp(-t)); });
  return coeff.transpose() * x;
}

double ntn_score(const GennModel& m, const Eigen::RowVectorXd& ga, const Eigen::RowVectorXd& gb) {
  Eigen::VectorXd z(GennModel::kNtnChannels);
  for (int i = 0; i < GennModel::kNtnChannels; ++i)
    z(i) = ga * m.ntn_bilinear[i] * gb.transpose();
  Eigen::RowVectorXd cat(2 * GennModel::kEmbedDim);
  cat << ga, gb;
  z += m.ntn_linear * cat.transpose() + m.ntn_bias;
  const double u = m.out_w.dot(z) + m.out_b;
  return 1.0 / (1.0 + std::exp(-u));
}

double ged_to_similarity(double ged, int n1, int n2) {
  return std::exp(-2.0 * ged / (n1 + n2));
}

double similarity_to_h(double s, int n1p, int n2p) {
  if (s <= 0.0 || s > 1.0) throw std::domain_error("similarity must lie in (0, 1]");
  return -0.5 * (n1p + n2p) * std::log(s);
}

double predict_similarity(const GennModel& m, const Graph& g1, const Graph& g2,
                          EmbedStrategy strategy) {
  if (g1.size() == 0 || g2.size() == 0)
    throw EmptyGraphError("similarity prediction needs nonempty graphs");
  switch (strategy) {
    case EmbedStrategy::Vanilla: {
      const Eigen::MatrixXd e1 = gcn_forward(m, g1, init_features(g1, m.features));
      const Eigen::MatrixXd e2 = gcn_forward(m, g2, init_features(g2, m.features));
      return ntn_score(m, attention_pool(m, e1), attention_pool(m, e2));
    }
    case EmbedStrategy::ExactDynamic: {
      const LayerCache c1 = build_layer_cache(m, g1);
      const LayerCache c2 = build_layer_cache(m, g2);
      return ntn_score(m, attention_pool(m, c1.x3), attention_pool(m, c2.x3));
    }
    case EmbedStrategy::RowCache: {
      const EmbeddingCache c1 = build_cache(m, g1);
      const EmbeddingCache c2 = build_cache(m, g2);
      return masked_similarity(m, c1, c2, std::uint64_t{0}, std::uint64_t{0});
    }
  }
  throw std::logic_error("unknown strategy");
}

}  // namespace gedforge::genn
