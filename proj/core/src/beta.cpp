#include "cfps/beta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cfps/error.hpp"

namespace cfps {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void require_positive(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw PreconditionError(std::string(what) + " must be finite and > 0, got " + std::to_string(a));
}

}  // namespace

double log_gamma(double z) {
  require_positive(z, "log_gamma argument");
  if (z < 0.5) {
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    return std::log(std::numbers::pi / std::abs(std::sin(std::numbers::pi * z))) - log_gamma(1.0 - z);
  }
  const double w = z - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (w + static_cast<double>(i));
  const double t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (w + 0.5) * std::log(t) - t + std::log(series);
}

double digamma(double z) {
  require_positive(z, "digamma argument");
  if (z < 0.5) return digamma(1.0 - z) - std::numbers::pi / std::tan(std::numbers::pi * z);
  const double w = z - 1.0;
  double series = kLanczos[0];
  double series_d = 0.0;
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    const double denom = w + static_cast<double>(i);
    series += kLanczos[i] / denom;
    series_d -= kLanczos[i] / (denom * denom);
  }
  const double t = w + kLanczosG + 0.5;
  return std::log(t) + (w + 0.5) / t - 1.0 + series_d / series;
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

double beta_log_prob(double alpha, double beta, double g) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  if (!(g > 0.0 && g < 1.0))
    throw PreconditionError("Beta log-density needs 0 < g < 1, got " + std::to_string(g));
  return (alpha - 1.0) * std::log(g) + (beta - 1.0) * std::log1p(-g) - log_beta(alpha, beta);
}

BetaLogProbGrad beta_log_prob_grad(double alpha, double beta, double g) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  if (!(g > 0.0 && g < 1.0))
    throw PreconditionError("Beta log-density needs 0 < g < 1, got " + std::to_string(g));
  const double psi_sum = digamma(alpha + beta);
  return {std::log(g) - digamma(alpha) + psi_sum, std::log1p(-g) - digamma(beta) + psi_sum};
}

double sample_gamma(double shape, Rng& rng) {
  require_positive(shape, "gamma shape");
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  if (shape < 1.0) {
    const double u = uniform(rng);
    return sample_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform(rng);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(double alpha, double beta, Rng& rng) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  for (;;) {
    const double x = sample_gamma(alpha, rng);
    const double y = sample_gamma(beta, rng);
    const double g = x / (x + y);
    if (g > 0.0 && g < 1.0) return g;
  }
}

}  // namespace cfps
