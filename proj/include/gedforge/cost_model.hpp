#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace gedforge {

inline constexpr double kInfCost = std::numeric_limits<double>::infinity();

inline bool is_inf_cost(double c) { return std::isinf(c) && c > 0; }

enum class CostVariant { UniformLabel, Unlabeled, Geometric };

/// Pluggable edit-cost functions. UniformLabel charges unit costs with
/// label-sensitive substitution; Unlabeled ignores labels entirely; Geometric
/// derives edge costs from weights and prohibits node insertion/deletion.
class EditCostModel {
 public:
  static EditCostModel uniform_label();
  static EditCostModel unlabeled();
  static EditCostModel geometric();

  CostVariant variant() const { return variant_; }

  double node_sub(const std::string& a, const std::string& b) const {
    switch (variant_) {
      case CostVariant::UniformLabel:
        return a == b ? 0.0 : node_sub_;
      default:
        return 0.0;
    }
  }
  double node_del() const { return node_del_; }
  double node_ins() const { return node_ins_; }

  double edge_sub(double w1, double w2) const {
    return variant_ == CostVariant::Geometric ? std::abs(w1 - w2) : edge_sub_;
  }
  double edge_del(double w) const {
    return variant_ == CostVariant::Geometric ? w : edge_del_;
  }
  double edge_ins(double w) const {
    return variant_ == CostVariant::Geometric ? w : edge_ins_;
  }

  static EditCostModel from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static EditCostModel load(const std::string& path);

  std::string variant_name() const;

 private:
  CostVariant variant_ = CostVariant::UniformLabel;
  double node_sub_ = 1.0;
  double node_del_ = 1.0;
  double node_ins_ = 1.0;
  double edge_sub_ = 0.0;
  double edge_del_ = 1.0;
  double edge_ins_ = 1.0;

  friend class CostModelOverrides;
};

}  // namespace gedforge
