#pragma once

#include <span>

#include <Eigen/Dense>

#include "gedforge/genn/model.hpp"
#include "gedforge/graph.hpp"

namespace gedforge::genn {

inline constexpr double kAttentionScale = 10.0;

enum class EmbedStrategy { Vanilla, ExactDynamic, RowCache };
const char* to_string(EmbedStrategy s);

/// Symmetrically normalized weighted adjacency with self-loops:
/// D^{-1/2} (A + I) D^{-1/2}.
Eigen::MatrixXd normalized_adjacency(const Graph& g);

/// Same construction restricted to the induced subgraph on `nodes`
/// (ascending original indices).
Eigen::MatrixXd normalized_adjacency(const Graph& g, std::span<const int> nodes);

/// Three convolution layers, ReLU after the first two, none after the last.
Eigen::MatrixXd gcn_forward(const GennModel& m, const Graph& g, const Eigen::MatrixXd& x0);

/// Full forward pass on the graph restricted to `nodes`, keeping the original
/// input feature rows. This is what the vanilla dynamic strategy recomputes at
/// every search state.
Eigen::MatrixXd gcn_forward_masked(const GennModel& m, const Graph& g,
                                   const Eigen::MatrixXd& x0_full, std::span<const int> nodes);

/// Attention pooling: coefficients from a tanh-transformed mean key, scaled
/// sigmoid gating, weighted row sum. Throws EmptyGraphError for 0 rows.
Eigen::RowVectorXd attention_pool(const GennModel& m, const Eigen::Ref<const Eigen::MatrixXd>& x);

/// Bilinear-plus-linear scoring of two graph embeddings, squashed to (0,1).
double ntn_score(const GennModel& m, const Eigen::RowVectorXd& ga, const Eigen::RowVectorXd& gb);

/// s = exp(-2 ged / (n1+n2)) and its inverse h = -(n1'+n2')/2 * ln(s).
double ged_to_similarity(double ged, int n1, int n2);
double similarity_to_h(double s, int n1p, int n2p);

/// End-to-end similarity of two full graphs. All strategies agree here; they
/// differ only in how embeddings are maintained under node deletion.
double predict_similarity(const GennModel& m, const Graph& g1, const Graph& g2,
                          EmbedStrategy strategy = EmbedStrategy::Vanilla);

}  // namespace gedforge::genn
