#include "knnad/divergence.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace knnad {

namespace {

constexpr double kVarianceFloor = 2e-5;
constexpr double kKlFloor = 1e-12;

double log_det_from_llt(const Eigen::LLT<Matrix>& llt) {
  double acc = 0.0;
  const auto& L = llt.matrixLLT();
  for (Index i = 0; i < L.rows(); ++i) {
    acc += std::log(L(i, i));
  }
  return 2.0 * acc;
}

Eigen::LLT<Matrix> checked_llt(const Matrix& m, const char* which) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(std::string("bhattacharyya: covariance ") + which +
                                " is singular or not positive-definite");
  }
  for (Index i = 0; i < m.rows(); ++i) {
    if (!(llt.matrixLLT()(i, i) > 0.0)) {
      throw std::invalid_argument(std::string("bhattacharyya: covariance ") + which +
                                  " is singular or not positive-definite");
    }
  }
  return llt;
}

double scalar_bhattacharyya(double m1, double m2, double v1, double v2) {
  const double md = m1 - m2;
  return 0.125 * md * md * (2.0 / (v1 + v2)) +
         0.5 * std::log(0.5 * (v1 + v2) / std::sqrt(v1 * v2));
}

}  // namespace

GaussianSummary summarize(const Dataset& data) {
  const Index n = data.size();
  if (n < 2) {
    throw std::invalid_argument("summarize: need at least 2 points");
  }
  GaussianSummary s;
  s.mean = data.points.colwise().mean().transpose();
  const Matrix centered = data.points.rowwise() - s.mean.transpose();
  s.covariance = centered.transpose() * centered / static_cast<double>(n - 1);
  return s;
}

double bhattacharyya(const GaussianSummary& p, const GaussianSummary& q) {
  const Index d = p.mean.size();
  if (q.mean.size() != d || p.covariance.rows() != d || p.covariance.cols() != d ||
      q.covariance.rows() != d || q.covariance.cols() != d) {
    throw std::invalid_argument("bhattacharyya: dimension mismatch");
  }
  const auto llt_p = checked_llt(p.covariance, "p");
  const auto llt_q = checked_llt(q.covariance, "q");
  const Matrix avg = 0.5 * (p.covariance + q.covariance);
  const auto llt_avg = checked_llt(avg, "(p+q)/2");

  const Vector diff = p.mean - q.mean;
  const double quad = diff.dot(llt_avg.solve(diff));
  const double log_term =
      log_det_from_llt(llt_avg) - 0.5 * (log_det_from_llt(llt_p) + log_det_from_llt(llt_q));
  return 0.125 * quad + 0.5 * log_term;
}

DistanceProfile windowed_bhattacharyya(const Vector& pdf_a, const Vector& pdf_b,
                                       const Vector& grid, int window_len,
                                       int stride) {
  const Index b = grid.size();
  if (pdf_a.size() != b || pdf_b.size() != b) {
    throw std::invalid_argument("windowed_bhattacharyya: pdf/grid length mismatch");
  }
  if (window_len < 2) {
    throw std::invalid_argument("windowed_bhattacharyya: window length must be >= 2");
  }
  if (static_cast<Index>(window_len) > b) {
    throw std::invalid_argument("windowed_bhattacharyya: window longer than the grid");
  }
  if (stride <= 0) {
    stride = window_len;
  }

  DistanceProfile profile;
  profile.window_len = window_len;
  profile.grid_size = b;
  std::vector<double> starts, dists;
  const double w = static_cast<double>(window_len);
  for (Index i = 0; i + window_len <= b; i += stride) {
    const auto seg_a = pdf_a.segment(i, window_len);
    const auto seg_b = pdf_b.segment(i, window_len);
    const double m1 = seg_a.mean();
    const double m2 = seg_b.mean();
    double v1 = (seg_a.array() - m1).square().sum() / (w - 1.0);
    double v2 = (seg_b.array() - m2).square().sum() / (w - 1.0);
    if (v1 == 0.0) {
      v1 = kVarianceFloor;
      ++profile.floor_hits;
    }
    if (v2 == 0.0) {
      v2 = kVarianceFloor;
      ++profile.floor_hits;
    }
    starts.push_back(grid(i));
    dists.push_back(scalar_bhattacharyya(m1, m2, v1, v2));
  }
  profile.window_starts = Eigen::Map<const Vector>(starts.data(), static_cast<Index>(starts.size()));
  profile.distances = Eigen::Map<const Vector>(dists.data(), static_cast<Index>(dists.size()));
  return profile;
}

KlResult kl_divergence(const Vector& pdf_p, const Vector& pdf_q, const Vector& grid) {
  const Index b = grid.size();
  if (pdf_p.size() != b || pdf_q.size() != b) {
    throw std::invalid_argument("kl_divergence: pdf/grid length mismatch");
  }
  if (b < 2) {
    throw std::invalid_argument("kl_divergence: need at least 2 grid points");
  }
  const double dx = grid(1) - grid(0);
  if (!(dx > 0.0)) {
    throw std::invalid_argument("kl_divergence: grid must be strictly increasing");
  }
  for (Index i = 1; i < b; ++i) {
    const double step = grid(i) - grid(i - 1);
    if (std::abs(step - dx) > 1e-9 * std::max(1.0, std::abs(dx))) {
      throw std::invalid_argument("kl_divergence: grid must be uniform");
    }
  }
  for (Index i = 0; i < b; ++i) {
    if (pdf_p(i) < 0.0 || pdf_q(i) < 0.0) {
      throw std::invalid_argument("kl_divergence: negative density value at index " +
                                  std::to_string(i));
    }
  }
  const double mass_p = pdf_p.sum() * dx;
  const double mass_q = pdf_q.sum() * dx;
  if (std::abs(mass_p - 1.0) > 1e-3 || std::abs(mass_q - 1.0) > 1e-3) {
    throw std::invalid_argument(
        "kl_divergence: inputs must be renormalized to integrate to 1 on the grid");
  }

  KlResult out;
  double acc = 0.0;
  for (Index i = 0; i < b; ++i) {
    const double p = pdf_p(i);
    if (p <= 0.0) {
      continue;
    }
    double q = pdf_q(i);
    if (q == 0.0) {
      q = kKlFloor;
      ++out.floor_hits;
    }
    acc += p * std::log(p / q);
  }
  out.value = acc * dx;
  return out;
}

DensityEstimate knots_density(const Dataset& data, const PipelineOptions& options) {
  if (data.dim() != 1) {
    throw std::invalid_argument("knots_density: 1-D datasets only");
  }
  validate(data);
  const SplitDataset split = split_dataset(data, options.split_fraction, options.seed);
  const int k = options.k > 0 ? options.k : default_k(split.reference.size());

  std::vector<double> xs(split.evaluation.points.col(0).data(),
                         split.evaluation.points.col(0).data() + split.evaluation.size());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Matrix knots(static_cast<Index>(xs.size()), 1);
  for (Index i = 0; i < knots.rows(); ++i) {
    knots(i, 0) = xs[static_cast<std::size_t>(i)];
  }

  DensityEstimate est = estimate_density(knots, split.reference, k);
  if (options.bounds) {
    est = boundary_correct(std::move(est), split.reference, *options.bounds, k);
  }
  if (options.renormalize) {
    const double z =
        normalization_constant(split.reference, k, options.norm_grid_size, options.bounds);
    est.values /= z;
    est.renormalized = true;
  }
  return est;
}

CommonGridPdfs resample_pair(const DensityEstimate& a, const DensityEstimate& b,
                             Index grid_size) {
  if (a.dim != 1 || b.dim != 1) {
    throw std::invalid_argument("resample_pair: 1-D estimates only");
  }
  if (grid_size < 2) {
    throw std::invalid_argument("resample_pair: grid size must be >= 2");
  }
  const double lo = std::min(a.eval_points.col(0).minCoeff(), b.eval_points.col(0).minCoeff());
  const double hi = std::max(a.eval_points.col(0).maxCoeff(), b.eval_points.col(0).maxCoeff());
  if (!(hi > lo)) {
    throw std::invalid_argument("resample_pair: degenerate support range");
  }
  CommonGridPdfs out;
  out.grid = linspace(lo, hi, grid_size);
  out.pdf_a = resample_on_grid(a, out.grid);
  out.pdf_b = resample_on_grid(b, out.grid);
  return out;
}

}  // namespace knnad
