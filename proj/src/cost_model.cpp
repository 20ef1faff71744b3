#include "gedforge/cost_model.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "gedforge/error.hpp"

namespace gedforge {

EditCostModel EditCostModel::uniform_label() {
  EditCostModel m;
  m.variant_ = CostVariant::UniformLabel;
  return m;
}

EditCostModel EditCostModel::unlabeled() {
  EditCostModel m;
  m.variant_ = CostVariant::Unlabeled;
  return m;
}

EditCostModel EditCostModel::geometric() {
  EditCostModel m;
  m.variant_ = CostVariant::Geometric;
  m.node_del_ = kInfCost;
  m.node_ins_ = kInfCost;
  return m;
}

std::string EditCostModel::variant_name() const {
  switch (variant_) {
    case CostVariant::UniformLabel: return "uniform_label";
    case CostVariant::Unlabeled: return "unlabeled";
    case CostVariant::Geometric: return "geometric";
  }
  return "?";
}

EditCostModel EditCostModel::from_json(const nlohmann::json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  EditCostModel m;
  if (variant == "uniform_label") {
    m = uniform_label();
  } else if (variant == "unlabeled") {
    m = unlabeled();
  } else if (variant == "geometric") {
    m = geometric();
    for (const char* key : {"node_sub", "node_del", "node_ins", "edge_sub", "edge_del", "edge_ins"})
      if (j.contains(key)) throw ConfigError("geometric cost model takes no unit-cost overrides");
    return m;
  } else {
    throw ConfigError("unknown cost variant: " + variant);
  }
  auto read = [&](const char* key, double& slot) {
    if (j.contains(key)) {
      slot = j.at(key).get<double>();
      if (slot < 0) throw ConfigError(std::string(key) + " must be nonnegative");
    }
  };
  read("node_sub", m.node_sub_);
  read("node_del", m.node_del_);
  read("node_ins", m.node_ins_);
  read("edge_sub", m.edge_sub_);
  read("edge_del", m.edge_del_);
  read("edge_ins", m.edge_ins_);
  return m;
}

nlohmann::json EditCostModel::to_json() const {
  nlohmann::json j;
  j["variant"] = variant_name();
  if (variant_ != CostVariant::Geometric) {
    j["node_sub"] = node_sub_;
    j["node_del"] = node_del_;
    j["node_ins"] = node_ins_;
    j["edge_sub"] = edge_sub_;
    j["edge_del"] = edge_del_;
    j["edge_ins"] = edge_ins_;
  }
  return j;
}

EditCostModel EditCostModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed cost model JSON in " + path);
  return from_json(j);
}

}  // namespace gedforge
