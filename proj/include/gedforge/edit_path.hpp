#pragma once

#include <string>
#include <vector>

#include "gedforge/cost_model.hpp"
#include "gedforge/graph.hpp"

namespace gedforge {

enum class EditOpKind { NodeSub, NodeDel, NodeIns };

/// One node edition. `u` indexes the source graph, `v` the target graph;
/// the unused side is -1. Edge editions are induced, never stored.
struct EditOp {
  EditOpKind kind;
  int u = -1;
  int v = -1;

  static EditOp sub(int u, int v) { return {EditOpKind::NodeSub, u, v}; }
  static EditOp del(int u) { return {EditOpKind::NodeDel, u, -1}; }
  static EditOp ins(int v) { return {EditOpKind::NodeIns, -1, v}; }

  bool operator==(const EditOp&) const = default;
};

std::string to_string(const EditOp& op);

struct EditPath {
  std::vector<EditOp> ops;
  bool complete = false;
};

/// Consistent partial node mapping built by applying edit ops one at a time.
/// Source states: kUnedited, kDeleted, or the assigned target index.
/// Target states: kUnused, kInserted, or the assigned source index.
class PartialMapping {
 public:
  static constexpr int kUnedited = -2;
  static constexpr int kDeleted = -1;
  static constexpr int kUnused = -2;
  static constexpr int kInserted = -1;

  PartialMapping(int n1, int n2) : src_(n1, kUnedited), tgt_(n2, kUnused) {}

  void reset(int n1, int n2) {
    src_.assign(n1, kUnedited);
    tgt_.assign(n2, kUnused);
    edited_src_ = 0;
    used_tgt_ = 0;
  }

  /// Throws InvalidOpError if the op references an out-of-range index or an
  /// already-edited node.
  void apply(const EditOp& op);
  bool can_apply(const EditOp& op) const;

  int source_state(int u) const { return src_[u]; }
  int target_state(int v) const { return tgt_[v]; }
  bool source_edited(int u) const { return src_[u] != kUnedited; }
  bool target_used(int v) const { return tgt_[v] != kUnused; }
  int n1() const { return static_cast<int>(src_.size()); }
  int n2() const { return static_cast<int>(tgt_.size()); }
  int edited_sources() const { return edited_src_; }
  int used_targets() const { return used_tgt_; }
  bool complete() const { return edited_src_ == n1() && used_tgt_ == n2(); }

  static PartialMapping from_ops(const Graph& g1, const Graph& g2,
                                 const std::vector<EditOp>& ops);

 private:
  std::vector<int> src_;
  std::vector<int> tgt_;
  int edited_src_ = 0;
  int used_tgt_ = 0;
};

/// Exact cost g(p) of a (possibly partial) edit path: node edit costs plus the
/// induced edge editions. An edge is charged once, when the edit of its second
/// endpoint is fixed; the charge depends only on the node mapping, so the
/// result is invariant under reordering of ops.
double path_cost(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                 const EditPath& p);
double path_cost(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                 const PartialMapping& m);

/// Delta cost of appending `op` to the prefix described by `m`:
/// g(prefix + op) = g(prefix) + incremental_cost(...). Throws InvalidOpError
/// on a conflicting op.
double incremental_cost(const Graph& g1, const Graph& g2, const EditCostModel& cost,
                        const PartialMapping& m, const EditOp& op);

/// Induced subgraphs on the not-yet-edited nodes of both graphs. Only edges
/// with both endpoints unmatched survive; indices are re-compacted.
struct UnmatchedSubgraphs {
  Graph g1_sub;
  Graph g2_sub;
  std::vector<int> g1_new_to_old;
  std::vector<int> g2_new_to_old;
  std::vector<int> g1_old_to_new;  // -1 for edited nodes
  std::vector<int> g2_old_to_new;
};

UnmatchedSubgraphs unmatched_subgraphs(const Graph& g1, const Graph& g2,
                                       const PartialMapping& m);

bool is_complete_path(const Graph& g1, const Graph& g2, const EditPath& p);

}  // namespace gedforge
