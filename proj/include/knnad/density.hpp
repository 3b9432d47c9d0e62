#pragma once

#include <optional>
#include <vector>

#include "knnad/dataset.hpp"

namespace knnad {

/// Per-axis support limits; +-infinity marks an unbounded side.
struct SupportBounds {
  Vector lower;
  Vector upper;

  static SupportBounds unbounded(Index dim);
  static SupportBounds box(double lo, double hi, Index dim);
};

void validate(const SupportBounds& bounds);

/// A pdf estimate evaluated at a fixed set of points.
///
/// `radii` keeps the k-th neighbour distance per evaluation point so that
/// boundary correction does not have to re-scan the reference set.
/// `saturated` lists the points whose k-th neighbour distance was exactly
/// zero (duplicate saturation) and whose value was therefore taken from the
/// nearest point with a positive radius.
struct DensityEstimate {
  Matrix eval_points;
  Vector values;
  Vector radii;
  int k = 0;
  Index m_ref = 0;
  Index dim = 0;
  bool corrected = false;
  bool renormalized = false;
  std::vector<Index> saturated;
};

/// k-th smallest Euclidean distance from `query` to the reference points,
/// duplicates counted with multiplicity. Requires 1 <= k <= reference size.
double kth_nn_distance(const Eigen::Ref<const Vector>& query,
                       const Dataset& reference, int k);

/// Volume of the d-ball of the given radius: c_d * r^d with
/// c_d = pi^(d/2) / Gamma(d/2 + 1). 2r in 1-D, pi r^2 in 2-D.
double ball_volume(double radius, int dim);

/// Rule-of-thumb neighbour count: ceil(sqrt(reference size)).
int default_k(Index reference_size);

/// Evaluates f(x) = (k-1) / (M * Vol(r_k(x))) at each evaluation point, with
/// r_k the k-th neighbour distance into `reference` (size M). Requires k >= 2
/// and M >= k. Zero-radius points are patched from the nearest positive-radius
/// evaluation point and recorded in `saturated`; if no such point exists the
/// call fails.
DensityEstimate estimate_density(const Matrix& eval_points,
                                 const Dataset& reference, int k);

/// Replaces the value of every evaluation point whose k-NN ball crosses a
/// finite bound with the value of the nearest evaluation point whose ball
/// lies entirely inside the bounds (ties broken by lowest index). Fails if
/// no interior point exists.
DensityEstimate boundary_correct(DensityEstimate estimate,
                                 const Dataset& reference,
                                 const SupportBounds& bounds, int k);

/// 1-D only: divides the values by the rectangular-rule integral
/// sum(f(x_i)) * dx over the sorted evaluation points (uniform grid assumed,
/// dx = grid step). Idempotent up to floating-point roundoff.
DensityEstimate renormalize(DensityEstimate estimate);

/// 1-D only: linear interpolation of the (eval_point, value) pairs onto a
/// sorted grid; exactly zero outside [min eval, max eval].
Vector resample_on_grid(const DensityEstimate& estimate, const Vector& grid);

/// 1-D only: rectangular-rule integral of the estimator over a uniform grid
/// spanning the reference range, used to renormalize sample-point estimates
/// by a constant. Boundary correction is applied on the grid when bounds are
/// given.
double normalization_constant(const Dataset& reference, int k, Index grid_size,
                              const std::optional<SupportBounds>& bounds = {});

}  // namespace knnad
