#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gedforge/genn/model.hpp"
#include "gedforge/graph.hpp"

namespace gedforge::genn {

/// Gradient container mirroring every GennModel parameter tensor.
struct GennGradients {
  std::array<Eigen::MatrixXd, 3> conv_w;
  Eigen::MatrixXd attention_w;
  std::vector<Eigen::MatrixXd> ntn_bilinear;
  Eigen::MatrixXd ntn_linear;
  Eigen::VectorXd ntn_bias;
  Eigen::RowVectorXd out_w;
  double out_b = 0.0;

  static GennGradients zeros_like(const GennModel& m);
  void set_zero();
  void scale(double s);
};

/// Flattened views over the matrix tensors, in checkpoint order. The scalar
/// out_b is not included and is handled separately by the optimizer.
std::vector<Eigen::Map<Eigen::ArrayXd>> flat_tensors(GennModel& m);
std::vector<Eigen::Map<Eigen::ArrayXd>> flat_tensors(GennGradients& g);
std::vector<Eigen::Map<const Eigen::ArrayXd>> flat_tensors(const GennGradients& g);

/// Parameter-independent per-graph tensors, computed once per graph and shared
/// by every forward/backward pass over it.
struct GraphPrep {
  const Graph* graph = nullptr;
  Eigen::MatrixXd x0;      // init features
  Eigen::MatrixXd a_norm;  // normalized adjacency
};

GraphPrep prepare_graph(const FeatureConfig& config, const Graph& g);

/// Similarity of the masked pair recomputed from the current parameters:
/// full-graph convolutions, masked rows dropped before pooling. Equals
/// masked_similarity on freshly built caches.
double forward_masked(const GennModel& m, const GraphPrep& p1, const GraphPrep& p2,
                      std::uint64_t mask1, std::uint64_t mask2);

/// Reverse-mode gradients of (s - target)^2 through the whole pipeline,
/// accumulated into `grads`. Returns s; writes the sample loss if requested.
double backward_pair(const GennModel& m, const GraphPrep& p1, const GraphPrep& p2,
                     std::uint64_t mask1, std::uint64_t mask2, double target,
                     GennGradients& grads, double* loss = nullptr);

}  // namespace gedforge::genn
