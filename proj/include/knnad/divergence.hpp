#pragma once

#include "knnad/dataset.hpp"
#include "knnad/entropy.hpp"

namespace knnad {

/// Mean and covariance of a dataset (scalar variance in 1-D).
struct GaussianSummary {
  Vector mean;
  Matrix covariance;
};

/// Sample mean and sample covariance (n-1 denominator).
GaussianSummary summarize(const Dataset& data);

/// Bhattacharyya distance between two Gaussian summaries:
///   (1/8) dm' ((Si+Sj)/2)^-1 dm + (1/2) ln( det((Si+Sj)/2) / sqrt(det Si det Sj) )
/// Covariances must be symmetric positive-definite.
double bhattacharyya(const GaussianSummary& p, const GaussianSummary& q);

/// Per-window Bhattacharyya distances between two pdfs sampled on a common
/// grid. Window statistics are the sample mean/variance of the pdf VALUES in
/// the window; an exactly-zero variance is floored at 2e-5.
struct DistanceProfile {
  Vector window_starts;
  Vector distances;
  int window_len = 0;
  Index grid_size = 0;
  Index floor_hits = 0;  // number of window sides whose variance was floored
};

/// stride <= 0 means stride = window_len (consecutive non-overlapping
/// windows); windows that would run past the grid are dropped.
DistanceProfile windowed_bhattacharyya(const Vector& pdf_a, const Vector& pdf_b,
                                       const Vector& grid, int window_len,
                                       int stride = 0);

struct KlResult {
  double value = 0.0;
  Index floor_hits = 0;  // grid points where q was floored at 1e-12
};

/// sum_i p_i ln(p_i/q_i) dx over indices with p_i > 0, on a uniform grid.
/// Both inputs must integrate to 1 on the grid.
KlResult kl_divergence(const Vector& pdf_p, const Vector& pdf_q, const Vector& grid);

/// 1-D density of one set evaluated at its own (sorted, deduplicated)
/// evaluation-split sample points, optionally divided by the grid
/// normalization constant. This is the per-set half of the windowed
/// comparison pipeline.
DensityEstimate knots_density(const Dataset& data, const PipelineOptions& options = {});

/// Two 1-D densities resampled onto a shared uniform grid spanning the union
/// of their support ranges; each pdf is zero where its estimate has no value.
struct CommonGridPdfs {
  Vector grid;
  Vector pdf_a;
  Vector pdf_b;
};

CommonGridPdfs resample_pair(const DensityEstimate& a, const DensityEstimate& b,
                             Index grid_size);

}  // namespace knnad
