#pragma once

#include <random>

namespace cfps {

using Rng = std::mt19937_64;

/// ln Gamma(z) for z > 0 (Lanczos, g = 7, 9 terms).
double log_gamma(double z);

/// psi(z) = d/dz ln Gamma(z) for z > 0, from the derivative of the same
/// Lanczos series.
double digamma(double z);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b).
double log_beta(double a, double b);

/// Log-density of Beta(alpha, beta) at g. Throws PreconditionError unless
/// alpha, beta > 0 and 0 < g < 1.
double beta_log_prob(double alpha, double beta, double g);

struct BetaLogProbGrad {
  double d_alpha;
  double d_beta;
};

/// Partial derivatives of beta_log_prob with respect to alpha and beta.
BetaLogProbGrad beta_log_prob_grad(double alpha, double beta, double g);

/// Gamma(shape, 1) variate via Marsaglia-Tsang; shape < 1 is boosted by
/// Gamma(shape + 1) * U^(1/shape).
double sample_gamma(double shape, Rng& rng);

/// g = X / (X + Y), X ~ Gamma(alpha), Y ~ Gamma(beta). Redraws the rare
/// result that rounds onto 0 or 1, so the return is strictly inside (0, 1).
double sample_beta(double alpha, double beta, Rng& rng);

}  // namespace cfps
