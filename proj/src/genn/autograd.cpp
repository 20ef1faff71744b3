#include "gedforge/genn/autograd.hpp"

#include <bit>
#include <cmath>

#include "gedforge/error.hpp"
#include "gedforge/genn/network.hpp"

namespace gedforge::genn {

GennGradients GennGradients::zeros_like(const GennModel& m) {
  GennGradients g;
  for (int l = 0; l < 3; ++l)
    g.conv_w[l] = Eigen::MatrixXd::Zero(m.conv_w[l].rows(), m.conv_w[l].cols());
  g.attention_w = Eigen::MatrixXd::Zero(m.attention_w.rows(), m.attention_w.cols());
  for (const auto& slice : m.ntn_bilinear)
    g.ntn_bilinear.push_back(Eigen::MatrixXd::Zero(slice.rows(), slice.cols()));
  g.ntn_linear = Eigen::MatrixXd::Zero(m.ntn_linear.rows(), m.ntn_linear.cols());
  g.ntn_bias = Eigen::VectorXd::Zero(m.ntn_bias.size());
  g.out_w = Eigen::RowVectorXd::Zero(m.out_w.size());
  g.out_b = 0.0;
  return g;
}

void GennGradients::set_zero() {
  for (auto& t : flat_tensors(*this)) t.setZero();
  out_b = 0.0;
}

void GennGradients::scale(double s) {
  for (auto& t : flat_tensors(*this)) t *= s;
  out_b *= s;
}

namespace {

template <typename T, typename MapT>
std::vector<MapT> views(T& t) {
  std::vector<MapT> out;
  out.reserve(3 + 1 + t.ntn_bilinear.size() + 3);
  for (auto& w : t.conv_w) out.emplace_back(w.data(), w.size());
  out.emplace_back(t.attention_w.data(), t.attention_w.size());
  for (auto& slice : t.ntn_bilinear) out.emplace_back(slice.data(), slice.size());
  out.emplace_back(t.ntn_linear.data(), t.ntn_linear.size());
  out.emplace_back(t.ntn_bias.data(), t.ntn_bias.size());
  out.emplace_back(t.out_w.data(), t.out_w.size());
  return out;
}

}  // namespace

std::vector<Eigen::Map<Eigen::ArrayXd>> flat_tensors(GennModel& m) {
  return views<GennModel, Eigen::Map<Eigen::ArrayXd>>(m);
}
std::vector<Eigen::Map<Eigen::ArrayXd>> flat_tensors(GennGradients& g) {
  return views<GennGradients, Eigen::Map<Eigen::ArrayXd>>(g);
}
std::vector<Eigen::Map<const Eigen::ArrayXd>> flat_tensors(const GennGradients& g) {
  return views<const GennGradients, Eigen::Map<const Eigen::ArrayXd>>(g);
}

GraphPrep prepare_graph(const FeatureConfig& config, const Graph& g) {
  GraphPrep p;
  p.graph = &g;
  p.x0 = init_features(g, config);
  p.a_norm = normalized_adjacency(g);
  return p;
}

namespace {

struct PoolTape {
  std::vector<int> rows;  // unmasked row indices
  Eigen::MatrixXd xs;     // n' x 16
  Eigen::RowVectorXd xbar, key;
  Eigen::VectorXd coeff;
  Eigen::RowVectorXd g;
};

struct GraphTape {
  Eigen::MatrixXd ax0, z1, x1, ax1, z2, x2, ax2, x3;
  PoolTape pool;
};

void forward_graph(const GennModel& m, const GraphPrep& p, std::uint64_t mask, GraphTape& t) {
  const Eigen::MatrixXd& a = p.a_norm;
  t.ax0 = a * p.x0;
  t.z1 = t.ax0 * m.conv_w[0];
  t.x1 = t.z1.cwiseMax(0.0);
  t.ax1 = a * t.x1;
  t.z2 = t.ax1 * m.conv_w[1];
  t.x2 = t.z2.cwiseMax(0.0);
  t.ax2 = a * t.x2;
  t.x3 = t.ax2 * m.conv_w[2];

  const int n = static_cast<int>(t.x3.rows());
  PoolTape& P = t.pool;
  P.rows.clear();
  for (int i = 0; i < n; ++i)
    if (!(mask & (1ull << i))) P.rows.push_back(i);
  if (P.rows.empty()) throw EmptyGraphError("fully masked graph in training forward");
  P.xs.resize(P.rows.size(), t.x3.cols());
  for (std::size_t i = 0; i < P.rows.size(); ++i) P.xs.row(i) = t.x3.row(P.rows[i]);

  P.xbar = P.xs.colwise().mean();
  P.key = (P.xbar * m.attention_w).array().tanh();
  const Eigen::VectorXd logits = kAttentionScale * (P.xs * P.key.transpose());
  P.coeff = logits.unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
  P.g = P.coeff.transpose() * P.xs;
}

// Backward through attention pooling; accumulates into dx3 and grads.
void backward_pool(const GennModel& m, const GraphTape& t, const Eigen::RowVectorXd& dg,
                   Eigen::MatrixXd& dx3, GennGradients& grads) {
  const PoolTape& P = t.pool;
  const auto np = static_cast<int>(P.rows.size());

  const Eigen::VectorXd dc = P.xs * dg.transpose();
  Eigen::MatrixXd dxs = P.coeff * dg;
  const Eigen::VectorXd dlogit =
      (dc.array() * P.coeff.array() * (1.0 - P.coeff.array())).matrix();
  dxs.noalias() += kAttentionScale * dlogit * P.key;
  const Eigen::RowVectorXd dkey = kAttentionScale * (dlogit.transpose() * P.xs);
  const Eigen::RowVectorXd dq =
      (dkey.array() * (1.0 - P.key.array().square())).matrix();
  grads.attention_w.noalias() += P.xbar.transpose() * dq;
  const Eigen::RowVectorXd dxbar = dq * m.attention_w.transpose();
  dxs.rowwise() += dxbar / np;

  for (int i = 0; i < np; ++i) dx3.row(P.rows[i]) += dxs.row(i);
}

void backward_graph(const GennModel& m, const GraphPrep& p, const GraphTape& t,
                    const Eigen::MatrixXd& dx3, GennGradients& grads) {
  const Eigen::MatrixXd& a = p.a_norm;
  grads.conv_w[2].noalias() += t.ax2.transpose() * dx3;
  const Eigen::MatrixXd dx2 = a * (dx3 * m.conv_w[2].transpose());
  const Eigen::MatrixXd dz2 =
      (dx2.array() * (t.z2.array() > 0.0).cast<double>()).matrix();
  grads.conv_w[1].noalias() += t.ax1.transpose() * dz2;
  const Eigen::MatrixXd dx1 = a * (dz2 * m.conv_w[1].transpose());
  const Eigen::MatrixXd dz1 =
      (dx1.array() * (t.z1.array() > 0.0).cast<double>()).matrix();
  grads.conv_w[0].noalias() += t.ax0.transpose() * dz1;
}

struct NtnTape {
  Eigen::VectorXd z;
  double s = 0.0;
};

double forward_ntn(const GennModel& m, const Eigen::RowVectorXd& ga,
                   const Eigen::RowVectorXd& gb, NtnTape& t) {
  t.z.resize(GennModel::kNtnChannels);
  for (int i = 0; i < GennModel::kNtnChannels; ++i)
    t.z(i) = ga * m.ntn_bilinear[i] * gb.transpose();
  Eigen::RowVectorXd cat(2 * GennModel::kEmbedDim);
  cat << ga, gb;
  t.z += m.ntn_linear * cat.transpose() + m.ntn_bias;
  const double u = m.out_w.dot(t.z) + m.out_b;
  t.s = 1.0 / (1.0 + std::exp(-u));
  return t.s;
}

}  // namespace

double forward_masked(const GennModel& m, const GraphPrep& p1, const GraphPrep& p2,
                      std::uint64_t mask1, std::uint64_t mask2) {
  GraphTape t1, t2;
  forward_graph(m, p1, mask1, t1);
  forward_graph(m, p2, mask2, t2);
  NtnTape nt;
  return forward_ntn(m, t1.pool.g, t2.pool.g, nt);
}

double backward_pair(const GennModel& m, const GraphPrep& p1, const GraphPrep& p2,
                     std::uint64_t mask1, std::uint64_t mask2, double target,
                     GennGradients& grads, double* loss) {
  GraphTape t1, t2;
  forward_graph(m, p1, mask1, t1);
  forward_graph(m, p2, mask2, t2);
  NtnTape nt;
  const double s = forward_ntn(m, t1.pool.g, t2.pool.g, nt);
  if (loss) *loss = (s - target) * (s - target);

  const Eigen::RowVectorXd& ga = t1.pool.g;
  const Eigen::RowVectorXd& gb = t2.pool.g;

  const double ds = 2.0 * (s - target);
  const double du = ds * s * (1.0 - s);
  grads.out_w.noalias() += du * nt.z.transpose();
  grads.out_b += du;
  const Eigen::VectorXd dz = du * m.out_w.transpose();

  grads.ntn_bias += dz;
  Eigen::RowVectorXd cat(2 * GennModel::kEmbedDim);
  cat << ga, gb;
  grads.ntn_linear.noalias() += dz * cat;
  const Eigen::RowVectorXd dcat = dz.transpose() * m.ntn_linear;
  Eigen::RowVectorXd dga = dcat.head(GennModel::kEmbedDim);
  Eigen::RowVectorXd dgb = dcat.tail(GennModel::kEmbedDim);

  for (int i = 0; i < GennModel::kNtnChannels; ++i) {
    grads.ntn_bilinear[i].noalias() += dz(i) * (ga.transpose() * gb);
    dga.noalias() += dz(i) * (gb * m.ntn_bilinear[i].transpose());
    dgb.noalias() += dz(i) * (ga * m.ntn_bilinear[i]);
  }

  Eigen::MatrixXd dx3_1 = Eigen::MatrixXd::Zero(t1.x3.rows(), t1.x3.cols());
  Eigen::MatrixXd dx3_2 = Eigen::MatrixXd::Zero(t2.x3.rows(), t2.x3.cols());
  backward_pool(m, t1, dga, dx3_1, grads);
  backward_pool(m, t2, dgb, dx3_2, grads);
  backward_graph(m, p1, t1, dx3_1, grads);
  backward_graph(m, p2, t2, dx3_2, grads);
  return s;
}

}  // namespace gedforge::genn
