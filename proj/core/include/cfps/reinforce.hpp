#pragma once

#include <cstdint>
#include <functional>

#include "cfps/policy.hpp"

namespace cfps {

inline constexpr double kDefaultBaselineDecay = 0.99;
inline constexpr double kDefaultPolicyLearningRate = 2e-2;

/// Mutable state of the ratio-policy learner. Single writer.
struct TrainState {
  double baseline = 0.0;  // EMA of rewards
  double decay = kDefaultBaselineDecay;
  std::uint64_t step = 0;
  double learning_rate = kDefaultPolicyLearningRate;
  std::uint64_t rng_seed = 42;
};

struct UpdateStats {
  BetaParams params;
  double log_prob;
  double advantage;
  double grad_norm;  // ||advantage * grad log pi||
};

/// One REINFORCE ascent step with an EMA baseline:
///   A = reward - b
///   phi += lr * A * grad_phi log pi(g | s)
///   b = decay * b + (1 - decay) * reward
///   step += 1
/// The advantage always uses the baseline from before this call.
/// Throws NumericalError (with alpha, beta, g, A in the message) if the
/// gradient is not finite; policy and state are left untouched then.
UpdateStats reinforce_update(BetaPolicy& policy, TrainState& state, const CurvatureSummary& s,
                             double g, double reward);

/// One logged iteration of the learning loop.
struct StepRecord {
  std::uint64_t step;  // 1-based, after the update
  double alpha;
  double beta;
  double g;
  double reward;
  double baseline;  // after the update
  double grad_norm;
};

/// Samples g from the policy, scores it with `reward_of_g`, and applies
/// reinforce_update.
StepRecord policy_step(BetaPolicy& policy, TrainState& state, const CurvatureSummary& s, Rng& rng,
                       const std::function<double(double)>& reward_of_g);

/// Stationary bandit reward -(g - peak)^2.
inline double quadratic_bandit_reward(double g, double peak) { return -(g - peak) * (g - peak); }

}  // namespace cfps
