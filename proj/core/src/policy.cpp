#include "cfps/policy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "cfps/error.hpp"

namespace cfps {
namespace {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMatrixMap = Eigen::Map<const RowMajorMatrix>;
using MatrixMap = Eigen::Map<RowMajorMatrix>;
using ConstVectorMap = Eigen::Map<const Eigen::VectorXd>;
using VectorMap = Eigen::Map<Eigen::VectorXd>;

constexpr auto kIn = static_cast<Eigen::Index>(kSummaryDim);
constexpr auto kHid = static_cast<Eigen::Index>(kHiddenWidth);
constexpr Eigen::Index kOut = 2;

// Offsets into the flat parameter vector.
constexpr Eigen::Index kW1 = 0;
constexpr Eigen::Index kB1 = kW1 + kHid * kIn;
constexpr Eigen::Index kW2 = kB1 + kHid;
constexpr Eigen::Index kB2 = kW2 + kHid * kHid;
constexpr Eigen::Index kW3 = kB2 + kHid;
constexpr Eigen::Index kB3 = kW3 + kOut * kHid;
constexpr Eigen::Index kTotal = kB3 + kOut;

double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

struct Activations {
  Eigen::VectorXd x, h1, h2;
  Eigen::Vector2d z;
  BetaParams out;
};

Activations run_forward(const Eigen::VectorXd& p, const CurvatureSummary& s) {
  const ConstMatrixMap w1(p.data() + kW1, kHid, kIn);
  const ConstVectorMap b1(p.data() + kB1, kHid);
  const ConstMatrixMap w2(p.data() + kW2, kHid, kHid);
  const ConstVectorMap b2(p.data() + kB2, kHid);
  const ConstMatrixMap w3(p.data() + kW3, kOut, kHid);
  const ConstVectorMap b3(p.data() + kB3, kOut);

  Activations a;
  a.x = s.features();
  a.h1 = (w1 * a.x + b1).array().tanh().matrix();
  a.h2 = (w2 * a.h1 + b2).array().tanh().matrix();
  a.z = w3 * a.h2 + b3;
  a.out = {softplus(a.z[0]) + 1.0, softplus(a.z[1]) + 1.0};
  if (!a.h1.allFinite() || !a.h2.allFinite() || !std::isfinite(a.out.alpha) ||
      !std::isfinite(a.out.beta))
    throw NumericalError("policy forward pass produced non-finite activations (training diverged?)");
  return a;
}

}  // namespace

Eigen::VectorXd CurvatureSummary::features() const {
  Eigen::VectorXd f(kIn);
  for (std::size_t i = 0; i < kHistogramBins; ++i) f[static_cast<Eigen::Index>(i)] = histogram[i];
  for (std::size_t i = 0; i < moments.size(); ++i)
    f[static_cast<Eigen::Index>(kHistogramBins + i)] = moments[i];
  return f;
}

CurvatureSummary featurize_curvature(std::span<const double> h_norm) {
  if (h_norm.empty()) throw PreconditionError("cannot summarize an empty curvature field");
  CurvatureSummary s;
  const double n = static_cast<double>(h_norm.size());
  const double unit = 1.0 / n;
  double mean = 0.0;
  for (double h : h_norm) {
    const double clamped = std::clamp(h, 0.0, 1.0);
    const auto bin = std::min<std::size_t>(static_cast<std::size_t>(clamped * kHistogramBins),
                                           kHistogramBins - 1);
    s.histogram[bin] += unit;
    mean += h;
  }
  mean /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double h : h_norm) {
    const double d = h - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  const double sd = std::sqrt(m2);
  const double skew = sd > 1e-12 ? std::clamp(m3 / (sd * sd * sd), -10.0, 10.0) : 0.0;
  s.moments = {mean, sd, skew};
  return s;
}

CurvatureSummary featurize_curvature(const CurvatureField& curv) {
  return featurize_curvature(std::span<const double>(curv.h_norm));
}

std::size_t BetaPolicy::parameter_count() { return static_cast<std::size_t>(kTotal); }

BetaPolicy BetaPolicy::zeros() { return BetaPolicy(Eigen::VectorXd::Zero(kTotal)); }

BetaPolicy BetaPolicy::random_init(std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd p(kTotal);
  auto fill = [&](Eigen::Index begin, Eigen::Index count, Eigen::Index fan_in) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (Eigen::Index i = 0; i < count; ++i) p[begin + i] = dist(rng);
  };
  fill(kW1, kHid * kIn, kIn);
  fill(kB1, kHid, kIn);
  fill(kW2, kHid * kHid, kHid);
  fill(kB2, kHid, kHid);
  fill(kW3, kOut * kHid, kHid);
  fill(kB3, kOut, kHid);
  return BetaPolicy(std::move(p));
}

BetaPolicy::BetaPolicy(Eigen::VectorXd parameters) { set_parameters(std::move(parameters)); }

void BetaPolicy::set_parameters(Eigen::VectorXd parameters) {
  if (parameters.size() != kTotal)
    throw PreconditionError("policy expects " + std::to_string(kTotal) + " parameters, got " +
                            std::to_string(parameters.size()));
  if (!parameters.allFinite()) throw NumericalError("policy parameters contain non-finite values");
  params_ = std::move(parameters);
}

BetaParams BetaPolicy::forward(const CurvatureSummary& s) const { return run_forward(params_, s).out; }

double BetaPolicy::log_prob(const CurvatureSummary& s, double g) const {
  const BetaParams ab = forward(s);
  return beta_log_prob(ab.alpha, ab.beta, g);
}

Eigen::VectorXd BetaPolicy::grad_log_prob(const CurvatureSummary& s, double g, BetaParams* out_params,
                                          double* out_log_prob) const {
  const Activations a = run_forward(params_, s);
  const auto [d_alpha, d_beta] = beta_log_prob_grad(a.out.alpha, a.out.beta, g);
  if (out_params) *out_params = a.out;
  if (out_log_prob) *out_log_prob = beta_log_prob(a.out.alpha, a.out.beta, g);

  const ConstMatrixMap w2(params_.data() + kW2, kHid, kHid);
  const ConstMatrixMap w3(params_.data() + kW3, kOut, kHid);

  Eigen::VectorXd grad = Eigen::VectorXd::Zero(kTotal);
  const Eigen::Vector2d delta3(d_alpha * sigmoid(a.z[0]), d_beta * sigmoid(a.z[1]));
  MatrixMap(grad.data() + kW3, kOut, kHid) = delta3 * a.h2.transpose();
  VectorMap(grad.data() + kB3, kOut) = delta3;

  const Eigen::VectorXd delta2 =
      ((w3.transpose() * delta3).array() * (1.0 - a.h2.array().square())).matrix();
  MatrixMap(grad.data() + kW2, kHid, kHid) = delta2 * a.h1.transpose();
  VectorMap(grad.data() + kB2, kHid) = delta2;

  const Eigen::VectorXd delta1 =
      ((w2.transpose() * delta2).array() * (1.0 - a.h1.array().square())).matrix();
  MatrixMap(grad.data() + kW1, kHid, kIn) = delta1 * a.x.transpose();
  VectorMap(grad.data() + kB1, kHid) = delta1;
  return grad;
}

double sample_ratio(const BetaPolicy& policy, const CurvatureSummary& s, Rng& rng) {
  const BetaParams ab = policy.forward(s);
  return sample_beta(ab.alpha, ab.beta, rng);
}

}  // namespace cfps
