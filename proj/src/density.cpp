#include "knnad/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "knnad/parallel.hpp"
#include "knnad/special.hpp"

namespace knnad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// k-th smallest squared distance from one row to every reference row.
double kth_squared_distance(const Eigen::Ref<const Eigen::RowVectorXd>& query,
                            const Matrix& ref, int k, std::vector<double>& scratch) {
  const Index m = ref.rows();
  scratch.resize(static_cast<std::size_t>(m));
  if (ref.cols() == 1) {
    const double q = query(0);
    for (Index i = 0; i < m; ++i) {
      const double d = ref(i, 0) - q;
      scratch[static_cast<std::size_t>(i)] = d * d;
    }
  } else {
    for (Index i = 0; i < m; ++i) {
      scratch[static_cast<std::size_t>(i)] = (ref.row(i) - query).squaredNorm();
    }
  }
  auto kth = scratch.begin() + (k - 1);
  std::nth_element(scratch.begin(), kth, scratch.end());
  return *kth;
}

// Smallest slack between a point and the finite bounds; +inf when every axis
// is unbounded, negative when the point lies outside the box.
double bound_slack(const Eigen::Ref<const Eigen::RowVectorXd>& x,
                   const SupportBounds& bounds) {
  double slack = kInf;
  for (Index j = 0; j < x.size(); ++j) {
    if (std::isfinite(bounds.lower(j))) {
      slack = std::min(slack, x(j) - bounds.lower(j));
    }
    if (std::isfinite(bounds.upper(j))) {
      slack = std::min(slack, bounds.upper(j) - x(j));
    }
  }
  return slack;
}

// Index of the nearest point among `points` satisfying `eligible`, ties
// broken by lowest index. Returns -1 when no point is eligible.
template <typename Pred>
Index nearest_eligible(const Matrix& points, Index from, Pred eligible) {
  Index best = -1;
  double best_dist = kInf;
  for (Index j = 0; j < points.rows(); ++j) {
    if (j == from || !eligible(j)) {
      continue;
    }
    const double d = (points.row(j) - points.row(from)).squaredNorm();
    if (d < best_dist) {
      best_dist = d;
      best = j;
    }
  }
  return best;
}

}  // namespace

SupportBounds SupportBounds::unbounded(Index dim) {
  SupportBounds b;
  b.lower = Vector::Constant(dim, -kInf);
  b.upper = Vector::Constant(dim, kInf);
  return b;
}

SupportBounds SupportBounds::box(double lo, double hi, Index dim) {
  SupportBounds b;
  b.lower = Vector::Constant(dim, lo);
  b.upper = Vector::Constant(dim, hi);
  return b;
}

void validate(const SupportBounds& bounds) {
  if (bounds.lower.size() != bounds.upper.size() || bounds.lower.size() < 1) {
    throw std::invalid_argument("support bounds: lower/upper size mismatch");
  }
  for (Index j = 0; j < bounds.lower.size(); ++j) {
    if (std::isfinite(bounds.lower(j)) && std::isfinite(bounds.upper(j)) &&
        !(bounds.lower(j) < bounds.upper(j))) {
      throw std::invalid_argument("support bounds: lower must be below upper on axis " +
                                  std::to_string(j));
    }
  }
}

double kth_nn_distance(const Eigen::Ref<const Vector>& query,
                       const Dataset& reference, int k) {
  if (k < 1) {
    throw std::invalid_argument("kth_nn_distance: k must be >= 1");
  }
  if (static_cast<Index>(k) > reference.size()) {
    throw std::invalid_argument("kth_nn_distance: k exceeds the reference size");
  }
  if (query.size() != reference.dim()) {
    throw std::invalid_argument("kth_nn_distance: dimension mismatch");
  }
  std::vector<double> scratch;
  return std::sqrt(kth_squared_distance(query.transpose(), reference.points, k, scratch));
}

double ball_volume(double radius, int dim) {
  if (radius < 0.0) {
    throw std::invalid_argument("ball_volume: radius must be >= 0");
  }
  return unit_ball_volume(dim) * std::pow(radius, dim);
}

int default_k(Index reference_size) {
  return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(reference_size))));
}

DensityEstimate estimate_density(const Matrix& eval_points,
                                 const Dataset& reference, int k) {
  if (k < 2) {
    throw std::invalid_argument("estimate_density: k must be >= 2");
  }
  if (reference.size() < static_cast<Index>(k)) {
    throw std::invalid_argument("estimate_density: reference smaller than k");
  }
  if (eval_points.cols() != reference.dim()) {
    throw std::invalid_argument("estimate_density: dimension mismatch");
  }
  const Index n = eval_points.rows();
  const Index m = reference.size();
  const int dim = static_cast<int>(reference.dim());

  DensityEstimate est;
  est.eval_points = eval_points;
  est.values.resize(n);
  est.radii.resize(n);
  est.k = k;
  est.m_ref = m;
  est.dim = dim;

  const double scale =
      static_cast<double>(k - 1) / (static_cast<double>(m) * unit_ball_volume(dim));
  parallel_for(n, [&](Index begin, Index end) {
    std::vector<double> scratch;
    for (Index i = begin; i < end; ++i) {
      const double r2 =
          kth_squared_distance(eval_points.row(i), reference.points, k, scratch);
      const double r = std::sqrt(r2);
      est.radii(i) = r;
      est.values(i) = r > 0.0 ? scale / std::pow(r, dim) : 0.0;
    }
  });

  for (Index i = 0; i < n; ++i) {
    if (est.radii(i) == 0.0) {
      est.saturated.push_back(i);
    }
  }
  for (const Index i : est.saturated) {
    const Index j = nearest_eligible(est.eval_points, i,
                                     [&](Index q) { return est.radii(q) > 0.0; });
    if (j < 0) {
      throw std::runtime_error(
          "estimate_density: every evaluation point has a zero k-th neighbour "
          "distance (duplicate saturation)");
    }
    est.values(i) = est.values(j);
  }
  return est;
}

DensityEstimate boundary_correct(DensityEstimate estimate,
                                 const Dataset& reference,
                                 const SupportBounds& bounds, int k) {
  validate(bounds);
  if (bounds.lower.size() != estimate.dim) {
    throw std::invalid_argument("boundary_correct: bounds dimension mismatch");
  }
  if (estimate.m_ref != reference.size() || estimate.dim != reference.dim() ||
      estimate.k != k) {
    throw std::invalid_argument(
        "boundary_correct: estimate was not produced from this reference/k");
  }

  const Index n = estimate.eval_points.rows();
  std::vector<char> interior(static_cast<std::size_t>(n), 0);
  bool any_interior = false;
  bool any_affected = false;
  for (Index i = 0; i < n; ++i) {
    const double slack = bound_slack(estimate.eval_points.row(i), bounds);
    const bool inside = estimate.radii(i) <= slack;
    interior[static_cast<std::size_t>(i)] = inside ? 1 : 0;
    any_interior = any_interior || inside;
    any_affected = any_affected || !inside;
  }
  if (any_affected && !any_interior) {
    throw std::runtime_error(
        "boundary_correct: every k-NN ball intersects the boundary; no interior "
        "point to borrow from");
  }

  const Vector before = estimate.values;
  for (Index i = 0; i < n; ++i) {
    if (interior[static_cast<std::size_t>(i)]) {
      continue;
    }
    const Index j = nearest_eligible(estimate.eval_points, i, [&](Index q) {
      return interior[static_cast<std::size_t>(q)] != 0;
    });
    estimate.values(i) = before(j);
  }
  estimate.corrected = true;
  return estimate;
}

DensityEstimate renormalize(DensityEstimate estimate) {
  if (estimate.dim != 1) {
    throw std::invalid_argument("renormalize: only 1-D estimates are supported");
  }
  const Index n = estimate.eval_points.rows();
  if (n < 2) {
    throw std::invalid_argument("renormalize: need at least 2 evaluation points");
  }
  const double lo = estimate.eval_points.col(0).minCoeff();
  const double hi = estimate.eval_points.col(0).maxCoeff();
  if (!(hi > lo)) {
    throw std::invalid_argument("renormalize: need at least 2 distinct evaluation points");
  }
  const double dx = (hi - lo) / static_cast<double>(n - 1);
  const double integral = estimate.values.sum() * dx;
  if (!(integral > 0.0)) {
    throw std::runtime_error("renormalize: integral over the grid is zero");
  }
  estimate.values /= integral;
  estimate.renormalized = true;
  return estimate;
}

Vector resample_on_grid(const DensityEstimate& estimate, const Vector& grid) {
  if (estimate.dim != 1) {
    throw std::invalid_argument("resample_on_grid: only 1-D estimates are supported");
  }
  const Index n = estimate.eval_points.rows();
  if (n < 2) {
    throw std::invalid_argument("resample_on_grid: need at least 2 evaluation points");
  }
  for (Index i = 1; i < grid.size(); ++i) {
    if (grid(i) < grid(i - 1)) {
      throw std::invalid_argument("resample_on_grid: grid must be sorted ascending");
    }
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    order[static_cast<std::size_t>(i)] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return estimate.eval_points(a, 0) < estimate.eval_points(b, 0);
  });
  // Knots sorted by coordinate; equal coordinates keep the first occurrence.
  std::vector<double> xs, vs;
  xs.reserve(order.size());
  vs.reserve(order.size());
  for (const Index i : order) {
    const double x = estimate.eval_points(i, 0);
    if (!xs.empty() && x == xs.back()) {
      continue;
    }
    xs.push_back(x);
    vs.push_back(estimate.values(i));
  }
  if (xs.size() < 2) {
    throw std::invalid_argument("resample_on_grid: need at least 2 distinct evaluation points");
  }

  Vector out(grid.size());
  for (Index g = 0; g < grid.size(); ++g) {
    const double x = grid(g);
    if (x < xs.front() || x > xs.back()) {
      out(g) = 0.0;
      continue;
    }
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    const auto hi = static_cast<std::size_t>(it - xs.begin());
    if (hi < xs.size() && xs[hi] == x) {
      out(g) = vs[hi];
      continue;
    }
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    out(g) = vs[lo] + t * (vs[hi] - vs[lo]);
  }
  return out;
}

double normalization_constant(const Dataset& reference, int k, Index grid_size,
                              const std::optional<SupportBounds>& bounds) {
  if (reference.dim() != 1) {
    throw std::invalid_argument("normalization_constant: 1-D references only");
  }
  if (grid_size < 2) {
    throw std::invalid_argument("normalization_constant: grid size must be >= 2");
  }
  const double lo = reference.points.col(0).minCoeff();
  const double hi = reference.points.col(0).maxCoeff();
  if (!(hi > lo)) {
    throw std::runtime_error("normalization_constant: reference range is degenerate");
  }
  Matrix grid(grid_size, 1);
  grid.col(0) = linspace(lo, hi, grid_size);
  DensityEstimate est = estimate_density(grid, reference, k);
  if (bounds) {
    est = boundary_correct(std::move(est), reference, *bounds, k);
  }
  const double dx = (hi - lo) / static_cast<double>(grid_size - 1);
  const double integral = est.values.sum() * dx;
  if (!(integral > 0.0)) {
    throw std::runtime_error("normalization_constant: grid integral is zero");
  }
  return integral;
}

}  // namespace knnad
