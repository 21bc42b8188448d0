#pragma once

#include <filesystem>
#include <string>

#include "cfps/policy.hpp"
#include "cfps/reinforce.hpp"

namespace cfps {

inline constexpr int kCheckpointVersion = 1;

struct PolicyCheckpoint {
  BetaPolicy policy;
  TrainState state;
};

/// JSON checkpoint, fields in this order:
///   version, layer_widths, activation, parameters (flat, layout as in
///   BetaPolicy), train_state {baseline, decay, step, learning_rate, rng_seed}.
/// Doubles are written in shortest round-trip form, so parameters reload
/// bit-exactly.
std::string checkpoint_to_string(const PolicyCheckpoint& ckpt);
PolicyCheckpoint checkpoint_from_string(const std::string& text);

void save_checkpoint(const PolicyCheckpoint& ckpt, const std::filesystem::path& path);
PolicyCheckpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace cfps
