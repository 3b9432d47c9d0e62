#include "knnad/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "knnad/special.hpp"

namespace knnad {

EntropyEstimate plug_in_entropy(const Vector& density_values, int k, Index m_ref) {
  const Index n = density_values.size();
  if (n == 0) {
    throw std::invalid_argument("plug_in_entropy: empty value list");
  }
  double acc = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double v = density_values(i);
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument(
          "plug_in_entropy: density value at index " + std::to_string(i) +
          " is not strictly positive and finite");
    }
    acc -= std::log(v);
  }
  EntropyEstimate est;
  est.value = acc / static_cast<double>(n);
  est.k = k;
  est.n_eval = n;
  est.m_ref = m_ref;
  est.bias_corrected = false;
  return est;
}

EntropyEstimate plug_in_entropy(const DensityEstimate& density) {
  return plug_in_entropy(density.values, density.k, density.m_ref);
}

double entropy_bias_correction(int k) {
  if (k < 2) {
    throw std::invalid_argument("entropy_bias_correction: k must be >= 2");
  }
  const double km1 = static_cast<double>(k - 1);
  return std::log(km1) - digamma(km1);
}

EntropyEstimate bias_corrected_entropy(const EntropyEstimate& estimate) {
  if (estimate.bias_corrected) {
    throw std::invalid_argument("bias_corrected_entropy: estimate is already corrected");
  }
  EntropyEstimate out = estimate;
  out.value += entropy_bias_correction(estimate.k);
  out.bias_corrected = true;
  return out;
}

double gaussian_entropy_closed_form(double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::invalid_argument("gaussian_entropy_closed_form: sigma^2 must be positive");
  }
  return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * sigma2);
}

double beta_entropy_closed_form(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("beta_entropy_closed_form: parameters must be positive");
  }
  return ln_beta(alpha, beta) - (alpha - 1.0) * digamma(alpha) -
         (beta - 1.0) * digamma(beta) + (alpha + beta - 2.0) * digamma(alpha + beta);
}

EstimateEnsemble make_ensemble(std::vector<EntropyEstimate> estimates) {
  if (estimates.empty()) {
    throw std::invalid_argument("make_ensemble: empty ensemble");
  }
  EstimateEnsemble ens;
  ens.estimates = std::move(estimates);
  const auto r = static_cast<double>(ens.estimates.size());
  double acc = 0.0;
  for (const auto& e : ens.estimates) {
    acc += e.value;
  }
  ens.mean = acc / r;
  double ss = 0.0;
  for (const auto& e : ens.estimates) {
    const double d = e.value - ens.mean;
    ss += d * d;
  }
  ens.variance = ens.estimates.size() > 1 ? ss / (r - 1.0) : 0.0;
  return ens;
}

Vector normalized_scores(const EstimateEnsemble& ensemble) {
  if (ensemble.estimates.size() < 2) {
    throw std::invalid_argument("normalized_scores: need at least 2 estimates");
  }
  if (!(ensemble.variance > 0.0)) {
    throw std::invalid_argument("normalized_scores: ensemble variance is zero");
  }
  const double sd = std::sqrt(ensemble.variance);
  Vector z(static_cast<Index>(ensemble.estimates.size()));
  for (Index i = 0; i < z.size(); ++i) {
    z(i) = (ensemble.estimates[static_cast<std::size_t>(i)].value - ensemble.mean) / sd;
  }
  return z;
}

Interval confidence_interval(const EstimateEnsemble& ensemble, double level) {
  if (ensemble.estimates.size() < 2) {
    throw std::invalid_argument("confidence_interval: need at least 2 estimates");
  }
  if (!(level > 0.0) || !(level < 1.0)) {
    throw std::invalid_argument("confidence_interval: level must lie in (0, 1)");
  }
  if (!(ensemble.variance > 0.0)) {
    throw std::invalid_argument("confidence_interval: degenerate ensemble");
  }
  const double z = normal_quantile(1.0 - 0.5 * (1.0 - level));
  const double half =
      z * std::sqrt(ensemble.variance / static_cast<double>(ensemble.estimates.size()));
  return Interval{ensemble.mean - half, ensemble.mean + half};
}

RatePrediction predicted_rates(const RateModel& model, int k, Index m, Index n) {
  if (k < 1 || m < 1 || n < 1) {
    throw std::invalid_argument("predicted_rates: k, m, n must be positive");
  }
  RatePrediction out;
  out.bias = model.c1 * std::pow(static_cast<double>(k) / static_cast<double>(m),
                                 1.0 / static_cast<double>(model.dim)) +
             model.c2 / static_cast<double>(k);
  out.variance = model.c4 / static_cast<double>(n) + model.c5 / static_cast<double>(m);
  return out;
}

PipelineResult entropy_pipeline(const Dataset& data, const PipelineOptions& options) {
  validate(data);
  const SplitDataset split = split_dataset(data, options.split_fraction, options.seed);
  const int k = options.k > 0 ? options.k : default_k(split.reference.size());

  DensityEstimate density = estimate_density(split.evaluation.points, split.reference, k);
  if (options.bounds) {
    density = boundary_correct(std::move(density), split.reference, *options.bounds, k);
  }

  PipelineResult result;
  result.normalization = 1.0;
  if (options.renormalize && data.dim() == 1) {
    result.normalization =
        normalization_constant(split.reference, k, options.norm_grid_size, options.bounds);
    density.values /= result.normalization;
    density.renormalized = true;
  }
  result.plug_in = plug_in_entropy(density);
  result.corrected = bias_corrected_entropy(result.plug_in);
  result.density = std::move(density);
  return result;
}

}  // namespace knnad
