#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knnad/dataset.hpp"
#include "knnad/density.hpp"

namespace knnad {

/// A Shannon entropy estimate in nats.
struct EntropyEstimate {
  double value = 0.0;
  int k = 0;
  Index n_eval = 0;
  Index m_ref = 0;
  bool bias_corrected = false;
};

/// Plug-in estimate: mean of -ln(value) over the density values. Every value
/// must be finite and strictly positive; violations are reported with the
/// offending index.
EntropyEstimate plug_in_entropy(const Vector& density_values, int k, Index m_ref);
EntropyEstimate plug_in_entropy(const DensityEstimate& density);

/// The additive correction ln(k-1) - psi(k-1), k >= 2.
double entropy_bias_correction(int k);

EntropyEstimate bias_corrected_entropy(const EntropyEstimate& estimate);

/// (1/2) ln(2 pi e sigma^2), nats.
double gaussian_entropy_closed_form(double sigma2);

/// ln B(a,b) - (a-1) psi(a) - (b-1) psi(b) + (a+b-2) psi(a+b), nats.
double beta_entropy_closed_form(double alpha, double beta);

/// Independent realizations of one estimator with their sample moments
/// (variance uses the R-1 denominator).
struct EstimateEnsemble {
  std::vector<EntropyEstimate> estimates;
  double mean = 0.0;
  double variance = 0.0;
};

EstimateEnsemble make_ensemble(std::vector<EntropyEstimate> estimates);

/// z_i = (estimate_i - mean) / sqrt(variance); sample mean 0, variance 1.
Vector normalized_scores(const EstimateEnsemble& ensemble);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// mean +/- z_{(1-level)/2} * sqrt(variance / R).
Interval confidence_interval(const EstimateEnsemble& ensemble, double level);

/// Leading-order rate constants of the estimator (user supplied or fitted).
struct RateModel {
  double c1 = 0.0, c2 = 0.0, c4 = 0.0, c5 = 0.0;
  int dim = 1;
};

struct RatePrediction {
  double bias = 0.0;
  double variance = 0.0;
};

/// bias = c1 (k/m)^(1/d) + c2 / k; variance = c4 / n + c5 / m.
RatePrediction predicted_rates(const RateModel& model, int k, Index m, Index n);

/// Split -> density -> entropy in one call.
///
/// k = 0 selects ceil(sqrt(M)). In 1-D the sample-point density values are
/// divided by the rectangular-rule integral of the same estimator on a
/// uniform grid over the reference range (renormalize = true, the default);
/// in 2-D and above no renormalization is applied regardless of the flag.
/// When bounds are given the estimate is boundary-corrected first.
struct PipelineOptions {
  double split_fraction = 0.5;
  int k = 0;
  bool renormalize = true;
  std::optional<SupportBounds> bounds;
  Index norm_grid_size = 2048;
  std::uint64_t seed = 0;
};

struct PipelineResult {
  EntropyEstimate plug_in;
  EntropyEstimate corrected;
  DensityEstimate density;       // at the evaluation samples, as averaged
  double normalization = 1.0;    // divisor applied to the density values
};

PipelineResult entropy_pipeline(const Dataset& data, const PipelineOptions& options = {});

}  // namespace knnad
