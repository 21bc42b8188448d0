#include "cfps/reinforce.hpp"

#include <cmath>
#include <sstream>

#include "cfps/error.hpp"

namespace cfps {

UpdateStats reinforce_update(BetaPolicy& policy, TrainState& state, const CurvatureSummary& s,
                             double g, double reward) {
  if (!(g > 0.0 && g < 1.0))
    throw PreconditionError("REINFORCE update needs 0 < g < 1, got " + std::to_string(g));
  if (!std::isfinite(reward)) throw PreconditionError("reward must be finite");
  if (!(state.decay > 0.0 && state.decay < 1.0)) throw PreconditionError("baseline decay must lie in (0, 1)");

  UpdateStats stats{};
  const Eigen::VectorXd grad = policy.grad_log_prob(s, g, &stats.params, &stats.log_prob);
  stats.advantage = reward - state.baseline;
  const Eigen::VectorXd ascent = stats.advantage * grad;
  stats.grad_norm = ascent.norm();

  if (!ascent.allFinite() || !std::isfinite(stats.log_prob)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-finite policy gradient: alpha=" << stats.params.alpha << " beta=" << stats.params.beta
        << " g=" << g << " advantage=" << stats.advantage;
    throw NumericalError(msg.str());
  }

  if (stats.advantage != 0.0) policy.set_parameters(policy.parameters() + state.learning_rate * ascent);
  state.baseline = state.decay * state.baseline + (1.0 - state.decay) * reward;
  ++state.step;
  return stats;
}

StepRecord policy_step(BetaPolicy& policy, TrainState& state, const CurvatureSummary& s, Rng& rng,
                       const std::function<double(double)>& reward_of_g) {
  const double g = sample_ratio(policy, s, rng);
  const double reward = reward_of_g(g);
  const UpdateStats stats = reinforce_update(policy, state, s, g, reward);
  return {state.step, stats.params.alpha, stats.params.beta, g, reward, state.baseline, stats.grad_norm};
}

}  // namespace cfps
