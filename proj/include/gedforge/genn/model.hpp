#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gedforge/genn/features.hpp"

namespace gedforge::genn {

/// All learnable parameters of the similarity network: three graph convolution
/// layers (feature_dim -> 64 -> 32 -> 16), shared attention weights, and the
/// neural tensor scoring head with t = 16 channels.
struct GennModel {
  static constexpr std::array<int, 3> kConvChannels{64, 32, 16};
  static constexpr int kEmbedDim = 16;
  static constexpr int kNtnChannels = 16;

  FeatureConfig features;
  std::array<Eigen::MatrixXd, 3> conv_w;       // (F0,64) (64,32) (32,16)
  Eigen::MatrixXd attention_w;                 // 16x16, shared by both graphs
  std::vector<Eigen::MatrixXd> ntn_bilinear;   // t slices of 16x16
  Eigen::MatrixXd ntn_linear;                  // t x 32
  Eigen::VectorXd ntn_bias;                    // t
  Eigen::RowVectorXd out_w;                    // 1 x t
  double out_b = 0.0;

  static GennModel glorot_init(FeatureConfig features, std::uint64_t seed);

  /// Versioned JSON checkpoint. Tensor order: conv0..conv2, attention,
  /// ntn_bilinear_0..15, ntn_linear, ntn_bias, out_w, out_b.
  void save(const std::string& path) const;
  static GennModel load(const std::string& path);
};

}  // namespace gedforge::genn
