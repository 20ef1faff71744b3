#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gedforge/genn/network.hpp"

namespace gedforge::genn {

/// Last-convolution-layer node embeddings of a full graph, computed once per
/// solve and reused at every search state by plain row deletion.
struct EmbeddingCache {
  std::string graph_id;
  Eigen::MatrixXd final_embeddings;  // n x 16
  EmbedStrategy strategy = EmbedStrategy::RowCache;
};

EmbeddingCache build_cache(const GennModel& m, const Graph& g);

/// Similarity of the row subsets that survive the masks. This is the defining
/// computation of the row-cache strategy: attention and NTN applied to the
/// literal unmasked rows of the cached full-graph embeddings.
/// Throws EmptyGraphError when a side is fully masked.
double masked_similarity(const GennModel& m, const EmbeddingCache& c1, const EmbeddingCache& c2,
                         std::uint64_t masked1, std::uint64_t masked2);
double masked_similarity(const GennModel& m, const EmbeddingCache& c1, const EmbeddingCache& c2,
                         std::span<const int> masked1, std::span<const int> masked2);

/// Every intermediate activation of a forward pass, kept row-aligned with the
/// surviving node list so single-node deletions can be tracked incrementally.
struct LayerCache {
  std::vector<int> nodes;  // surviving original indices, ascending
  Eigen::MatrixXd x0, x1, x2, x3;
};

LayerCache build_layer_cache(const GennModel& m, const Graph& g);

/// Removes one node and recomputes, at layer l, only the rows within l+1 hops
/// of the deleted node on the modified graph; all other rows carry over. The
/// final layer matches a full forward pass on the modified graph.
LayerCache exact_dynamic_update(const GennModel& m, const Graph& g, const LayerCache& cache,
                                int deleted_node);

}  // namespace gedforge::genn
