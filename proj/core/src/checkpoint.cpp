#include "cfps/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cfps/error.hpp"

namespace cfps {

using ordered_json = nlohmann::ordered_json;

std::string checkpoint_to_string(const PolicyCheckpoint& ckpt) {
  const auto& p = ckpt.policy.parameters();
  ordered_json j;
  j["version"] = kCheckpointVersion;
  j["layer_widths"] = BetaPolicy::kLayerWidths;
  j["activation"] = "tanh";
  j["parameters"] = std::vector<double>(p.data(), p.data() + p.size());
  j["train_state"] = {
      {"baseline", ckpt.state.baseline},
      {"decay", ckpt.state.decay},
      {"step", ckpt.state.step},
      {"learning_rate", ckpt.state.learning_rate},
      {"rng_seed", ckpt.state.rng_seed},
  };
  return j.dump(2) + "\n";
}

PolicyCheckpoint checkpoint_from_string(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int version = j.at("version").get<int>();
    if (version != kCheckpointVersion)
      throw Error("unsupported checkpoint version " + std::to_string(version));
    const auto widths = j.at("layer_widths").get<std::vector<std::size_t>>();
    if (widths != std::vector<std::size_t>(BetaPolicy::kLayerWidths.begin(), BetaPolicy::kLayerWidths.end()))
      throw Error("checkpoint layer widths do not match this build's policy network");
    if (j.at("activation").get<std::string>() != "tanh") throw Error("unsupported activation");
    const auto flat = j.at("parameters").get<std::vector<double>>();
    Eigen::VectorXd params = Eigen::Map<const Eigen::VectorXd>(flat.data(), static_cast<Eigen::Index>(flat.size()));

    const auto& ts = j.at("train_state");
    TrainState state;
    state.baseline = ts.at("baseline").get<double>();
    state.decay = ts.at("decay").get<double>();
    state.step = ts.at("step").get<std::uint64_t>();
    state.learning_rate = ts.at("learning_rate").get<double>();
    state.rng_seed = ts.at("rng_seed").get<std::uint64_t>();
    return {BetaPolicy(std::move(params)), state};
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid checkpoint: ") + e.what());
  }
}

void save_checkpoint(const PolicyCheckpoint& ckpt, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << checkpoint_to_string(ckpt);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

PolicyCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_string(buf.str());
}

}  // namespace cfps
