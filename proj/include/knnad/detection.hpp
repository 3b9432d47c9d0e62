#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "knnad/dataset.hpp"
#include "knnad/divergence.hpp"

namespace knnad {

/// Upper detection threshold t = mu + z_{alpha/2} * sigma.
struct Threshold {
  double value = 0.0;
  double alpha = 0.05;
  double mu = 0.0;
  double sigma = 0.0;
};

/// mu/sigma are the sample mean and sample standard deviation (n-1) of the
/// training scores; z is the standard normal upper quantile at alpha/2.
Threshold threshold_from_training(const Vector& training_scores, double alpha);

struct DetectionReport {
  std::vector<Index> indices;
  Vector scores;
  std::vector<bool> flags;
  Threshold threshold;
  std::optional<std::vector<bool>> ground_truth;
};

/// Flags score_i > threshold.value (strict; ties are not anomalies). With
/// two_sided, scores below the mirrored lower bound flag as well.
DetectionReport detect_series(const Vector& scores, const Threshold& threshold,
                              const std::optional<std::vector<bool>>& ground_truth = {},
                              bool two_sided = false);

/// Scores rescaled by their maximum absolute value, paired with the 0/1
/// ground truth for plotting.
struct ScanSeries {
  Vector scores;
  std::vector<int> truth;
};

ScanSeries scan_statistic(const Vector& scores, const std::vector<bool>& ground_truth);

/// Windows whose distance strictly exceeds the threshold, as
/// (grid x-start, distance) pairs in profile order.
std::vector<std::pair<double, double>> detect_windows(const DistanceProfile& profile,
                                                      double threshold_value);

}  // namespace knnad
