#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Core>

#include "cfps/beta.hpp"
#include "cfps/curvature.hpp"

namespace cfps {

inline constexpr std::size_t kHistogramBins = 64;
inline constexpr std::size_t kSummaryDim = kHistogramBins + 3;
inline constexpr std::size_t kHiddenWidth = 32;

/// Fixed-size, permutation-invariant state fed to the ratio policy.
struct CurvatureSummary {
  std::array<double, kHistogramBins> histogram{};  // sums to 1
  std::array<double, 3> moments{};                 // mean, std, skewness

  Eigen::VectorXd features() const;
};

/// 64-bin histogram of h_norm over [0, 1] (1.0 lands in the last bin) plus
/// mean, standard deviation and standardized third moment clamped to
/// [-10, 10] (0 when the std is 0).
CurvatureSummary featurize_curvature(std::span<const double> h_norm);
CurvatureSummary featurize_curvature(const CurvatureField& curv);

struct BetaParams {
  double alpha;
  double beta;

  double mean() const { return alpha / (alpha + beta); }
};

/// Two-hidden-layer tanh MLP, 67 -> 32 -> 32 -> 2, with softplus(.) + 1
/// heads so that alpha, beta > 1 for any finite input.
///
/// Parameters are one flat vector laid out as W1 (32x67, row-major), b1,
/// W2 (32x32), b2, W3 (2x32), b3.
class BetaPolicy {
 public:
  static constexpr std::array<std::size_t, 4> kLayerWidths = {kSummaryDim, kHiddenWidth,
                                                              kHiddenWidth, 2};
  static std::size_t parameter_count();

  /// All parameters zero: alpha = beta = 1 + ln 2 for every input.
  static BetaPolicy zeros();
  /// Weights and biases uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)].
  static BetaPolicy random_init(std::uint64_t seed);

  explicit BetaPolicy(Eigen::VectorXd parameters);

  const Eigen::VectorXd& parameters() const noexcept { return params_; }
  void set_parameters(Eigen::VectorXd parameters);

  /// Throws NumericalError if any activation is non-finite.
  BetaParams forward(const CurvatureSummary& s) const;

  double log_prob(const CurvatureSummary& s, double g) const;

  /// Exact gradient of log pi(g | s) with respect to the flat parameters.
  Eigen::VectorXd grad_log_prob(const CurvatureSummary& s, double g, BetaParams* out_params = nullptr,
                                double* out_log_prob = nullptr) const;

 private:
  Eigen::VectorXd params_;
};

inline BetaParams policy_forward(const BetaPolicy& policy, const CurvatureSummary& s) {
  return policy.forward(s);
}

/// Draws an exchange ratio g ~ Beta(alpha, beta) from the policy output.
double sample_ratio(const BetaPolicy& policy, const CurvatureSummary& s, Rng& rng);

}  // namespace cfps
