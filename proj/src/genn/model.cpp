#include "gedforge/genn/model.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "gedforge/error.hpp"

namespace gedforge::genn {

namespace {

Eigen::MatrixXd glorot(int rows, int cols, std::mt19937_64& rng) {
  const double limit = std::sqrt(6.0 / (rows + cols));
  std::uniform_real_distribution<double> dist(-limit, limit);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

nlohmann::ordered_json tensor_json(const std::string& name,
                                   const Eigen::Ref<const Eigen::MatrixXd>& m) {
  nlohmann::ordered_json t;
  t["name"] = name;
  t["shape"] = {m.rows(), m.cols()};
  std::vector<double> data;
  data.reserve(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
  t["data"] = std::move(data);
  return t;
}

Eigen::MatrixXd tensor_from_json(const nlohmann::json& t) {
  const auto shape = t.at("shape").get<std::vector<Eigen::Index>>();
  if (shape.size() != 2) throw IoError("checkpoint tensor shape must be 2-D");
  const auto data = t.at("data").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(data.size()) != shape[0] * shape[1])
    throw IoError("checkpoint tensor data does not match its shape");
  Eigen::MatrixXd m(shape[0], shape[1]);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < shape[0]; ++i)
    for (Eigen::Index j = 0; j < shape[1]; ++j) m(i, j) = data[idx++];
  return m;
}

}  // namespace

GennModel GennModel::glorot_init(FeatureConfig features, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GennModel m;
  m.features = std::move(features);
  int in = m.features.feature_dim();
  for (int l = 0; l < 3; ++l) {
    m.conv_w[l] = glorot(in, kConvChannels[l], rng);
    in = kConvChannels[l];
  }
  m.attention_w = glorot(kEmbedDim, kEmbedDim, rng);
  m.ntn_bilinear.reserve(kNtnChannels);
  for (int i = 0; i < kNtnChannels; ++i)
    m.ntn_bilinear.push_back(glorot(kEmbedDim, kEmbedDim, rng));
  m.ntn_linear = glorot(kNtnChannels, 2 * kEmbedDim, rng);
  m.ntn_bias = Eigen::VectorXd::Zero(kNtnChannels);
  m.out_w = glorot(1, kNtnChannels, rng);
  m.out_b = 0.0;
  return m;
}

void GennModel::save(const std::string& path) const {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["feature_config"] = features.to_json();
  auto layers = nlohmann::ordered_json::array();
  for (int l = 0; l < 3; ++l) layers.push_back(tensor_json("conv" + std::to_string(l), conv_w[l]));
  layers.push_back(tensor_json("attention_w", attention_w));
  for (int i = 0; i < kNtnChannels; ++i)
    layers.push_back(tensor_json("ntn_bilinear_" + std::to_string(i), ntn_bilinear[i]));
  layers.push_back(tensor_json("ntn_linear", ntn_linear));
  layers.push_back(tensor_json("ntn_bias", ntn_bias));
  layers.push_back(tensor_json("out_w", out_w));
  layers.push_back(tensor_json("out_b", Eigen::MatrixXd::Constant(1, 1, out_b)));
  j["layers"] = std::move(layers);

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump() << "\n";
}

GennModel GennModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed checkpoint JSON in " + path);
  if (j.value("format_version", 0) != 1) throw IoError("unsupported checkpoint format version");

  GennModel m;
  m.features = FeatureConfig::from_json(j.at("feature_config"));
  const auto& layers = j.at("layers");
  const std::size_t expected = 3 + 1 + kNtnChannels + 4;
  if (layers.size() != expected) throw IoError("checkpoint has wrong tensor count");

  std::size_t idx = 0;
  for (int l = 0; l < 3; ++l) m.conv_w[l] = tensor_from_json(layers[idx++]);
  m.attention_w = tensor_from_json(layers[idx++]);
  for (int i = 0; i < kNtnChannels; ++i) m.ntn_bilinear.push_back(tensor_from_json(layers[idx++]));
  m.ntn_linear = tensor_from_json(layers[idx++]);
  m.ntn_bias = tensor_from_json(layers[idx++]);
  m.out_w = tensor_from_json(layers[idx++]);
  m.out_b = tensor_from_json(layers[idx++])(0, 0);

  if (m.conv_w[0].rows() != m.features.feature_dim())
    throw IoError("checkpoint conv0 does not match the feature configuration");
  return m;
}

}  // namespace gedforge::genn
